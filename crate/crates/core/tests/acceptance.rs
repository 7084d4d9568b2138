//! Acceptance criteria. Runs every criterion, prints one line each, and
//! exits non-zero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use orbital_chromatic::chroma::{
    chromatic_polynomial, cycle_index_rotation_at, fermat_check, orbital_by_definition,
    orbital_full_closed, orbital_rotation_closed, quotient_graph,
};
use orbital_chromatic::numtheory::{alternating_totient_sum, gcd};
use orbital_chromatic::oracle::{count_coloring_orbits, count_proper_colorings};
use orbital_chromatic::permgroup::{cycle_automorphisms, CycleSymmetry};
use orbital_chromatic::{Error, Multigraph, PermGroup, RationalPoly, Shape};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial from coefficients written highest degree first.
fn desc(c: &[i64]) -> RationalPoly {
    let mut asc = c.to_vec();
    asc.reverse();
    RationalPoly::from_ints(&asc)
}

/// `(1/den) * product of factors`, each factor given highest degree first.
fn factored(den: i64, factors: &[&[i64]]) -> RationalPoly {
    factors
        .iter()
        .fold(RationalPoly::one(), |acc, f| &acc * &desc(f))
        .scale(&q(1, den))
}

const L: &[i64] = &[1, 0];
const L1: &[i64] = &[1, -1];
const L2: &[i64] = &[1, -2];

/// Rotation-group table, `n = 1..=10`, as printed in factored form.
fn table_rotation() -> Vec<RationalPoly> {
    vec![
        RationalPoly::zero(),
        factored(2, &[L1, L]),
        factored(3, &[L1, L2, L]),
        factored(4, &[&[1, -3, 4], L1, L]),
        factored(5, &[&[1, -2, 2], L1, L2, L]),
        factored(6, &[&[1, -1, 1], &[1, -4, 5], L1, L]),
        factored(7, &[&[1, -1, 1], &[1, -3, 3], L1, L2, L]),
        factored(8, &[&[1, -7, 21, -35, 36, -24, 12], L1, L]),
        factored(9, &[&[1, -6, 16, -24, 22, -12, 6], L1, L2, L]),
        factored(10, &[&[1, -9, 36, -84, 126, -125, 80, -30, 9], L1, L]),
    ]
}

/// Full-automorphism-group table, `n = 1..=10`.
fn table_full() -> Vec<RationalPoly> {
    vec![
        RationalPoly::zero(),
        factored(2, &[L1, L]),
        factored(6, &[L1, L2, L]),
        factored(8, &[&[1, -1, 2], L1, L]),
        factored(10, &[&[1, -2, 2], L1, L2, L]),
        factored(12, &[&[1, -5, 13, -15, 8], L1, L]),
        factored(14, &[&[1, -1, 1], &[1, -3, 3], L1, L2, L]),
        factored(16, &[&[1, -7, 21, -31, 24, -12, 8], L1, L]),
        factored(18, &[&[1, -6, 16, -24, 22, -12, 6], L1, L2, L]),
        factored(20, &[&[1, -9, 36, -84, 131, -145, 110, -50, 14], L1, L]),
    ]
}

fn groups(n: usize) -> [(&'static str, PermGroup, RationalPoly); 2] {
    [
        ("rotation", PermGroup::rotations(n).unwrap(), orbital_rotation_closed(n).unwrap()),
        ("full", PermGroup::automorphisms_of_cycle(n).unwrap(), orbital_full_closed(n).unwrap()),
    ]
}

fn ac1_tables() -> Check {
    for (n, expected) in (1..).zip(table_rotation()) {
        if orbital_rotation_closed(n).unwrap() != expected {
            return Err(format!("rotation table row {n}"));
        }
    }
    for (n, expected) in (1..).zip(table_full()) {
        if orbital_full_closed(n).unwrap() != expected {
            return Err(format!("full table row {n}"));
        }
    }
    Ok(())
}

fn ac2_three_way() -> Check {
    let spot = count_coloring_orbits(&Multigraph::cycle(3).unwrap(), &PermGroup::rotations(3).unwrap(), 3)
        .map_err(|e| e.to_string())?;
    if spot != 2 {
        return Err(format!("n=3 rotations at 3 colors gave {spot}, expected 2"));
    }
    let spot = count_coloring_orbits(
        &Multigraph::cycle(4).unwrap(),
        &PermGroup::automorphisms_of_cycle(4).unwrap(),
        3,
    )
    .map_err(|e| e.to_string())?;
    if spot != 6 {
        return Err(format!("n=4 full group at 3 colors gave {spot}, expected 6"));
    }
    for n in 1..=8 {
        let g = Multigraph::cycle(n).unwrap();
        for (name, grp, closed) in groups(n) {
            let by_definition = orbital_by_definition(&g, &grp).map_err(|e| e.to_string())?;
            for lambda in 0..=4u64 {
                let a = closed.eval_int(lambda as i64);
                let b = by_definition.eval_int(lambda as i64);
                let c = count_coloring_orbits(&g, &grp, lambda).map_err(|e| e.to_string())?;
                if a != b || a != BigRational::from_integer(c.into()) {
                    return Err(format!("{name}, n={n}, lambda={lambda}: {a} / {b} / {c}"));
                }
            }
        }
    }
    Ok(())
}

fn ac3_closed_vs_definition() -> Check {
    for n in 1..=12 {
        let g = Multigraph::cycle(n).unwrap();
        for (name, grp, closed) in groups(n) {
            if orbital_by_definition(&g, &grp).map_err(|e| e.to_string())? != closed {
                return Err(format!("{name}, n={n}"));
            }
        }
    }
    Ok(())
}

fn ac4_structure() -> Check {
    for n in 1..=24usize {
        let g = Multigraph::cycle(n).unwrap();
        for (sym, perm) in cycle_automorphisms(n).unwrap() {
            let expected = match sym {
                CycleSymmetry::Rotation(m) => {
                    let k = gcd(n as u64, m as u64) as usize;
                    if k == 2 {
                        Shape::Path { edges: 1, loops: (false, false) }
                    } else {
                        Shape::Cycle(k)
                    }
                }
                CycleSymmetry::VertexReflection(_) => Shape::Path { edges: n / 2, loops: (false, n % 2 == 1) },
                CycleSymmetry::EdgeReflection(_) => Shape::Path { edges: n / 2 - 1, loops: (true, true) },
            };
            let got = quotient_graph(&g, &perm).unwrap().classify_shape();
            if got != expected {
                return Err(format!("C_{n}/{sym}: {got:?}, expected {expected:?}"));
            }
        }
    }
    Ok(())
}

fn ac5_cycle_formula() -> Check {
    let shift = RationalPoly::from_ints(&[-1, 1]);
    for n in 1..=12usize {
        let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
        let expected = &shift.pow(n as u32) + &shift.scale(&sign);
        if chromatic_polynomial(&Multigraph::cycle(n).unwrap()) != expected {
            return Err(format!("n={n}"));
        }
    }
    Ok(())
}

fn ac6_totient_sum() -> Check {
    for n in 1..=500u64 {
        let expected = if n % 2 == 1 { -(n as i64) } else { 0 };
        let got = alternating_totient_sum(n).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("n={n}: {got}"));
        }
    }
    Ok(())
}

fn ac7_fermat() -> Check {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if !fermat_check(p, 50).map_err(|e| e.to_string())? {
            return Err(format!("p={p}"));
        }
    }
    for c in [4u64, 9, 15, 21, 25, 27] {
        match fermat_check(c, 50) {
            Err(Error::NotPrime { n, factor, cofactor }) if n == c && factor > 1 && factor * cofactor == c => {}
            other => return Err(format!("composite {c} not rejected with a witness: {other:?}")),
        }
    }
    Ok(())
}

fn ac8_cycle_index() -> Check {
    let shift = RationalPoly::from_ints(&[-1, 1]);
    for n in 1..=24usize {
        let z = cycle_index_rotation_at(n, &shift).unwrap();
        let (rot, full) = if n % 2 == 1 {
            (&z - &shift, &z.scale(&q(1, 2)) - &shift.scale(&q(1, 2)))
        } else {
            let tail = (&RationalPoly::x() * &shift.pow(n as u32 / 2)).scale(&q(1, 4));
            (z.clone(), &z.scale(&q(1, 2)) + &tail)
        };
        if rot != orbital_rotation_closed(n).unwrap() || full != orbital_full_closed(n).unwrap() {
            return Err(format!("n={n}"));
        }
    }
    Ok(())
}

fn ac9_birkhoff() -> Check {
    let mut rng = StdRng::seed_from_u64(0x0c0101);
    for trial in 0..200 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(0..=10);
        let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let g = Multigraph::with_edges(n, edges).unwrap();
        let p = chromatic_polynomial(&g);
        for lambda in 0..=4u64 {
            let count = count_proper_colorings(&g, lambda).map_err(|e| e.to_string())?;
            let value = p.eval_int(lambda as i64);
            if value.is_negative() || value != BigRational::from_integer(count.into()) {
                return Err(format!("trial {trial}, {g:?}, lambda={lambda}: {value} vs {count}"));
            }
        }
        if g.has_loop() && !p.is_zero() {
            return Err(format!("trial {trial}: loop graph with nonzero polynomial"));
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1 table reproduction (n=1..10, exact)", Duration::from_secs(1), ac1_tables),
        ("AC2 closed = definition = oracle (n<=8, lambda<=4)", Duration::from_secs(60), ac2_three_way),
        ("AC3 closed vs definition coefficients (n<=12)", Duration::from_secs(10), ac3_closed_vs_definition),
        ("AC4 quotient structure (n<=24, all elements)", Duration::from_secs(5), ac4_structure),
        ("AC5 cycle chromatic formula (n<=12)", Duration::from_secs(5), ac5_cycle_formula),
        ("AC6 alternating totient sum (n<=500)", Duration::from_secs(1), ac6_totient_sum),
        ("AC7 Fermat route (p<=31, lambda<=50)", Duration::from_secs(1), ac7_fermat),
        ("AC8 cycle-index restatements (n<=24)", Duration::from_secs(1), ac8_cycle_index),
        ("AC9 oracle vs chromatic on 200 random multigraphs", Duration::from_secs(60), ac9_birkhoff),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(()) if elapsed <= budget => "PASS".to_string(),
            Ok(()) => format!("FAIL (took {elapsed:.2?}, budget {budget:?})"),
            Err(msg) => format!("FAIL ({msg})"),
        };
        if !outcome.starts_with("PASS") {
            failed += 1;
        }
        println!("{outcome:<6} {name}  [{elapsed:.2?}]");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
