//! Chromatic polynomials, quotient graphs, and orbital chromatic polynomials
//! of the `n`-cycle.
//!
//! Two independent routes produce every orbital polynomial of a cycle:
//! [`orbital_by_definition`] averages chromatic polynomials of quotient
//! graphs computed by deletion–contraction, while [`orbital_rotation_closed`]
//! and [`orbital_full_closed`] evaluate the totient sums directly.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactpoly::RationalPoly;
use crate::multigraph::{Edge, Multigraph};
use crate::numtheory::{divisors, smallest_factor, totient};
use crate::permgroup::{is_automorphism, PermGroup, Permutation};
use crate::{Error, Result};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn lambda_pow(k: usize) -> RationalPoly {
    RationalPoly::x().pow(k as u32)
}

/// Chromatic polynomial by deletion–contraction.
///
/// Loops force the zero polynomial and parallel edges are collapsed before
/// every step. Disconnected graphs factor over their components, and
/// intermediate results are cached for the duration of the call.
pub fn chromatic_polynomial(g: &Multigraph) -> RationalPoly {
    let mut memo = HashMap::new();
    chromatic_memo(g, &mut memo)
}

fn chromatic_memo(g: &Multigraph, memo: &mut HashMap<Multigraph, RationalPoly>) -> RationalPoly {
    if g.has_loop() {
        return RationalPoly::zero();
    }
    let g = g.simplify();
    if g.edge_count() == 0 {
        return lambda_pow(g.vertex_count());
    }
    let components = g.component_vertices();
    if components.len() > 1 {
        return components
            .iter()
            .map(|c| chromatic_memo(&g.induced(c), memo))
            .fold(RationalPoly::one(), |acc, p| &acc * &p);
    }
    if let Some(p) = memo.get(&g) {
        return p.clone();
    }
    // Sorted edges and no loops: the first edge is the smallest non-loop edge.
    let e = g.edges()[0];
    let deleted = g.delete_edge(e).expect("edge taken from the graph");
    let contracted = g.contract_edge(e).expect("non-loop edge taken from the graph");
    let p = &chromatic_memo(&deleted, memo) - &chromatic_memo(&contracted, memo);
    memo.insert(g, p.clone());
    p
}

/// Plain deletion–contraction with a caller-chosen edge at every step and no
/// caching or component splitting. `choose` receives the non-loop edges of
/// the current simplified graph and returns an index into that slice.
pub fn chromatic_polynomial_with<F>(g: &Multigraph, choose: &mut F) -> RationalPoly
where
    F: FnMut(&[Edge]) -> usize,
{
    if g.has_loop() {
        return RationalPoly::zero();
    }
    let g = g.simplify();
    if g.edge_count() == 0 {
        return lambda_pow(g.vertex_count());
    }
    let e = g.edges()[choose(g.edges())];
    let deleted = g.delete_edge(e).expect("edge taken from the graph");
    let contracted = g.contract_edge(e).expect("non-loop edge taken from the graph");
    &chromatic_polynomial_with(&deleted, choose) - &chromatic_polynomial_with(&contracted, choose)
}

/// `(λ-1)^n + (-1)^n (λ-1)`.
pub fn cycle_chromatic_closed(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::domain("cycle length must be at least 1"));
    }
    let tail = RationalPoly::shifted_power(1);
    let tail = if n.is_multiple_of(2) { tail } else { -tail };
    Ok(&RationalPoly::shifted_power(n as u32) + &tail)
}

/// `λ(λ-1)^(k-1)` for the path on `k` vertices.
pub fn path_chromatic_closed(k: usize) -> Result<RationalPoly> {
    if k == 0 {
        return Err(Error::domain("path must have at least one vertex"));
    }
    Ok(&RationalPoly::x() * &RationalPoly::shifted_power(k as u32 - 1))
}

/// `G/g`: contract every cycle of `g` to a vertex, then collapse parallel
/// edges. Loops survive (one per vertex).
pub fn quotient_graph(g: &Multigraph, perm: &Permutation) -> Result<Multigraph> {
    if perm.degree() != g.vertex_count() {
        return Err(Error::domain(format!(
            "permutation of degree {} cannot act on a graph with {} vertices",
            perm.degree(),
            g.vertex_count()
        )));
    }
    Ok(g.contract_partition(&perm.cycles())?.simplify())
}

/// Average of the chromatic polynomials of `G/g` over all `g` in the group.
/// Every group element must be an automorphism of `G`.
pub fn orbital_by_definition(g: &Multigraph, group: &PermGroup) -> Result<RationalPoly> {
    let mut memo = HashMap::new();
    let mut total = RationalPoly::zero();
    for perm in group.elements() {
        if !is_automorphism(g, perm)? {
            return Err(Error::domain(format!("{perm} is not an automorphism of the graph")));
        }
        let quotient = quotient_graph(g, perm)?;
        total = &total + &chromatic_memo(&quotient, &mut memo);
    }
    Ok(total.scale(&ratio(1, group.order() as i64)))
}

/// `sum over d | n of totient(n/d) * x^d`, the un-normalized cycle index of
/// the rotation group with all variables set to `x`.
fn totient_weighted_powers(n: usize, x: &RationalPoly) -> Result<RationalPoly> {
    let mut sum = RationalPoly::zero();
    for d in divisors(n as u64)? {
        let weight = BigRational::from_integer(totient(n as u64 / d)?.into());
        sum = &sum + &x.pow(d as u32).scale(&weight);
    }
    Ok(sum)
}

/// Cycle index of the rotation group of the `n`-cycle with every variable set
/// to `x`: `(1/n) sum over d | n of totient(n/d) x^d`.
pub fn cycle_index_rotation_at(n: usize, x: &RationalPoly) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::domain("cycle index needs n >= 1"));
    }
    Ok(totient_weighted_powers(n, x)?.scale(&ratio(1, n as i64)))
}

/// Orbital chromatic polynomial of the `n`-cycle under rotations, from the
/// totient sum over divisors of `n`.
pub fn orbital_rotation_closed(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::domain("cycle length must be at least 1"));
    }
    let avg = totient_weighted_powers(n, &RationalPoly::shifted_power(1))?.scale(&ratio(1, n as i64));
    Ok(if n % 2 == 1 {
        &avg - &RationalPoly::shifted_power(1)
    } else {
        avg
    })
}

/// Orbital chromatic polynomial of the `n`-cycle under its full automorphism
/// group.
pub fn orbital_full_closed(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::domain("cycle length must be at least 1"));
    }
    let sum = totient_weighted_powers(n, &RationalPoly::shifted_power(1))?;
    let avg = sum.scale(&ratio(1, 2 * n as i64));
    let correction = if n % 2 == 1 {
        RationalPoly::shifted_power(1).scale(&ratio(-1, 2))
    } else {
        (&RationalPoly::x() * &RationalPoly::shifted_power(n as u32 / 2)).scale(&ratio(1, 4))
    };
    Ok(&avg + &correction)
}

/// Per-λ outcome of [`fermat_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatRow {
    pub lambda: u64,
    /// `((λ-1)^p - (λ-1)) mod p`, in `0..p`.
    pub residue: BigInt,
    /// `(1/p)((λ-1)^p + (p-1)(λ-1)) - λ + 1` at λ.
    pub remark_value: BigRational,
    /// Value of the rotation orbital polynomial of the `p`-cycle at λ.
    pub orbit_count: BigRational,
}

impl FermatRow {
    pub fn passes(&self) -> bool {
        let count_like = |q: &BigRational| q.is_integer() && !q.is_negative();
        self.residue.is_zero() && count_like(&self.remark_value) && count_like(&self.orbit_count)
    }
}

/// `(1/p)((λ-1)^p + (p-1)(λ-1)) - λ + 1`, integer-valued at every integer λ
/// exactly when `p` divides `(λ-1)^p - (λ-1)`.
pub fn fermat_form(p: u64) -> RationalPoly {
    let shifted = RationalPoly::shifted_power(1);
    let top = &RationalPoly::shifted_power(p as u32) + &shifted.scale(&ratio(p as i64 - 1, 1));
    &top.scale(&ratio(1, p as i64)) - &shifted
}

/// Checks `(λ-1)^p ≡ λ-1 (mod p)` for `λ` in `0..=lambda_max`, both by direct
/// modular arithmetic and through orbit counting: for odd `p` the rotation
/// orbital polynomial of the `p`-cycle is exactly [`fermat_form`], so its
/// integrality is the congruence. For `p = 2` the orbital polynomial is
/// `fermat_form(2) + (λ-1)`, which carries the same integrality.
pub fn fermat_rows(p: u64, lambda_max: u64) -> Result<(bool, Vec<FermatRow>)> {
    if p < 2 {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if let Some(f) = smallest_factor(p).filter(|&f| f != p) {
        return Err(Error::NotPrime { n: p, factor: f, cofactor: p / f });
    }
    let orbital = orbital_rotation_closed(p as usize)?;
    let form = fermat_form(p);
    let expected = if p % 2 == 1 {
        form.clone()
    } else {
        &form + &RationalPoly::shifted_power(1)
    };
    let forms_agree = expected == orbital;

    let modulus = BigInt::from(p);
    let rows: Vec<FermatRow> = (0..=lambda_max)
        .map(|lambda| {
            let base = BigInt::from(lambda as i64 - 1);
            let diff = base.pow(p as u32) - &base;
            let residue = ((diff % &modulus) + &modulus) % &modulus;
            FermatRow {
                lambda,
                residue,
                remark_value: form.eval_int(lambda as i64),
                orbit_count: orbital.eval_int(lambda as i64),
            }
        })
        .collect();
    Ok((forms_agree && rows.iter().all(FermatRow::passes), rows))
}

pub fn fermat_check(p: u64, lambda_max: u64) -> Result<bool> {
    fermat_rows(p, lambda_max).map(|(ok, _)| ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::Shape;
    use crate::numtheory::gcd;
    use crate::permgroup::{cycle_automorphisms, CycleSymmetry};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ints(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn chromatic_examples() {
        assert!(chromatic_polynomial(&Multigraph::cycle(1).unwrap()).is_zero());
        let c5 = chromatic_polynomial(&Multigraph::cycle(5).unwrap());
        assert_eq!(c5, &RationalPoly::shifted_power(5) - &RationalPoly::shifted_power(1));
        let p4 = chromatic_polynomial(&Multigraph::path(4).unwrap());
        assert_eq!(p4, &RationalPoly::x() * &RationalPoly::shifted_power(3));
        assert_eq!(chromatic_polynomial(&Multigraph::empty(3)), ints(&[0, 0, 0, 1]));
        assert_eq!(chromatic_polynomial(&Multigraph::empty(0)), RationalPoly::one());
    }

    #[test]
    fn complete_graph() {
        let k4 = Multigraph::with_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        // λ(λ-1)(λ-2)(λ-3)
        assert_eq!(chromatic_polynomial(&k4), ints(&[0, -6, 11, -6, 1]));
    }

    #[test]
    fn closed_forms() {
        assert!(cycle_chromatic_closed(1).unwrap().is_zero());
        assert_eq!(cycle_chromatic_closed(2).unwrap(), ints(&[0, -1, 1]));
        assert_eq!(cycle_chromatic_closed(3).unwrap(), ints(&[0, 2, -3, 1]));
        assert_eq!(
            cycle_chromatic_closed(3).unwrap(),
            &(&RationalPoly::x() * &ints(&[-1, 1])) * &ints(&[-2, 1])
        );
        assert!(cycle_chromatic_closed(0).is_err());
        assert_eq!(path_chromatic_closed(1).unwrap(), RationalPoly::x());
        assert_eq!(path_chromatic_closed(2).unwrap(), ints(&[0, -1, 1]));
        assert_eq!(path_chromatic_closed(3).unwrap(), ints(&[0, 1, -2, 1]));
        assert!(path_chromatic_closed(0).is_err());
    }

    #[test]
    fn cycle_and_path_agreement() {
        for n in 1..=12 {
            let g = Multigraph::cycle(n).unwrap();
            assert_eq!(chromatic_polynomial(&g), cycle_chromatic_closed(n).unwrap(), "n = {n}");
            let p = Multigraph::path(n).unwrap();
            assert_eq!(chromatic_polynomial(&p), path_chromatic_closed(n).unwrap());
        }
    }

    #[test]
    fn quotient_examples() {
        let c6 = Multigraph::cycle(6).unwrap();
        let q = quotient_graph(&c6, &Permutation::rotation(6, 2).unwrap()).unwrap();
        assert_eq!((q.vertex_count(), q.edges()), (2, &[(0, 1)][..]));
        let q = quotient_graph(&c6, &Permutation::rotation(6, 3).unwrap()).unwrap();
        assert_eq!(q, Multigraph::cycle(3).unwrap());
        let g = Multigraph::with_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(quotient_graph(&g, &Permutation::identity(3)).unwrap(), g.simplify());
        assert!(quotient_graph(&g, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn shape_examples() {
        let q = |n, s: CycleSymmetry| {
            let g = Multigraph::cycle(n).unwrap();
            quotient_graph(&g, &s.permutation(n).unwrap()).unwrap().classify_shape()
        };
        assert_eq!(q(6, CycleSymmetry::Rotation(2)), Shape::Path { edges: 1, loops: (false, false) });
        assert_eq!(q(5, CycleSymmetry::VertexReflection(0)), Shape::Path { edges: 2, loops: (false, true) });
        assert_eq!(q(6, CycleSymmetry::EdgeReflection(0)), Shape::Path { edges: 2, loops: (true, true) });
    }

    #[test]
    fn quotient_shapes_for_all_symmetries() {
        for n in 1..=24usize {
            for (sym, perm) in cycle_automorphisms(n).unwrap() {
                let shape = quotient_graph(&Multigraph::cycle(n).unwrap(), &perm)
                    .unwrap()
                    .classify_shape();
                let expected = match sym {
                    CycleSymmetry::Rotation(m) => match gcd(n as u64, m as u64) as usize {
                        2 => Shape::Path { edges: 1, loops: (false, false) },
                        k => Shape::Cycle(k),
                    },
                    CycleSymmetry::VertexReflection(_) => {
                        Shape::Path { edges: n / 2, loops: (false, n % 2 == 1) }
                    }
                    CycleSymmetry::EdgeReflection(_) => Shape::Path { edges: n / 2 - 1, loops: (true, true) },
                };
                assert_eq!(shape, expected, "{sym} on C_{n}");
            }
        }
    }

    #[test]
    fn orbital_definition_examples() {
        let c3 = Multigraph::cycle(3).unwrap();
        let tri = ints(&[0, 2, -3, 1]);
        assert_eq!(orbital_by_definition(&c3, &PermGroup::trivial(3)).unwrap(), tri);
        assert_eq!(
            orbital_by_definition(&c3, &PermGroup::rotations(3).unwrap()).unwrap(),
            tri.scale(&ratio(1, 3))
        );
        let c4 = Multigraph::cycle(4).unwrap();
        assert_eq!(
            orbital_by_definition(&c4, &PermGroup::automorphisms_of_cycle(4).unwrap()).unwrap(),
            ints(&[0, -2, 3, -2, 1]).scale(&ratio(1, 8))
        );
    }

    #[test]
    fn orbital_definition_rejects_non_automorphisms() {
        let path = Multigraph::path(3).unwrap();
        let err = orbital_by_definition(&path, &PermGroup::rotations(3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(orbital_by_definition(&path, &PermGroup::rotations(4).unwrap()).is_err());
    }

    #[test]
    fn closed_orbital_examples() {
        assert!(orbital_rotation_closed(1).unwrap().is_zero());
        assert_eq!(orbital_rotation_closed(2).unwrap(), ints(&[0, -1, 1]).scale(&ratio(1, 2)));
        // λ(λ-1)(λ-2)(λ²-2λ+2)/5
        let five = &ints(&[0, 2, -3, 1]) * &ints(&[2, -2, 1]);
        assert_eq!(orbital_rotation_closed(5).unwrap(), five.scale(&ratio(1, 5)));
        assert_eq!(orbital_full_closed(5).unwrap(), five.scale(&ratio(1, 10)));
        assert_eq!(orbital_full_closed(3).unwrap(), ints(&[0, 2, -3, 1]).scale(&ratio(1, 6)));
        assert!(orbital_full_closed(1).unwrap().is_zero());
        assert!(orbital_rotation_closed(0).is_err());
        assert!(orbital_full_closed(0).is_err());
    }

    #[test]
    fn definition_matches_closed_forms() {
        for n in 1..=12 {
            let g = Multigraph::cycle(n).unwrap();
            let rot = orbital_by_definition(&g, &PermGroup::rotations(n).unwrap()).unwrap();
            assert_eq!(rot, orbital_rotation_closed(n).unwrap(), "rotations, n = {n}");
            let full = orbital_by_definition(&g, &PermGroup::automorphisms_of_cycle(n).unwrap()).unwrap();
            assert_eq!(full, orbital_full_closed(n).unwrap(), "full, n = {n}");
        }
    }

    #[test]
    fn cycle_index_examples() {
        assert_eq!(cycle_index_rotation_at(1, &RationalPoly::x()).unwrap(), RationalPoly::x());
        let y = RationalPoly::shifted_power(1);
        let expected = (&(&y.pow(4) + &y.pow(2)) + &y.scale(&ratio(2, 1))).scale(&ratio(1, 4));
        assert_eq!(cycle_index_rotation_at(4, &y).unwrap(), expected);
        assert_eq!(cycle_index_rotation_at(6, &RationalPoly::one()).unwrap(), RationalPoly::one());
        assert!(cycle_index_rotation_at(0, &y).is_err());
    }

    #[test]
    fn cycle_index_restatements() {
        let y = RationalPoly::shifted_power(1);
        for n in 1..=24 {
            let z = cycle_index_rotation_at(n, &y).unwrap();
            let (rot, full) = if n % 2 == 1 {
                (&z - &y, (&z - &y).scale(&ratio(1, 2)))
            } else {
                let tail = (&RationalPoly::x() * &RationalPoly::shifted_power(n as u32 / 2)).scale(&ratio(1, 4));
                (z.clone(), &z.scale(&ratio(1, 2)) + &tail)
            };
            assert_eq!(orbital_rotation_closed(n).unwrap(), rot);
            assert_eq!(orbital_full_closed(n).unwrap(), full);
        }
    }

    #[test]
    fn leading_coefficients() {
        for n in 3..=24usize {
            let rot = orbital_rotation_closed(n).unwrap();
            assert_eq!(rot.degree(), Some(n));
            assert_eq!(rot.leading_coeff(), Some(&ratio(1, n as i64)));
            let full = orbital_full_closed(n).unwrap();
            assert_eq!(full.degree(), Some(n));
            assert_eq!(full.leading_coeff(), Some(&ratio(1, 2 * n as i64)));
        }
    }

    #[test]
    fn orbital_values_are_counts() {
        for n in 1..=12 {
            for poly in [orbital_rotation_closed(n).unwrap(), orbital_full_closed(n).unwrap()] {
                for lambda in 0..=8 {
                    let v = poly.eval_int(lambda);
                    assert!(v.is_integer() && !v.is_negative(), "n = {n}, λ = {lambda}: {v}");
                }
            }
        }
    }

    #[test]
    fn fermat_examples() {
        assert!(fermat_check(5, 10).unwrap());
        assert!(fermat_check(2, 10).unwrap());
        assert!(fermat_check(7, 20).unwrap());
        assert_eq!(
            fermat_check(9, 5).unwrap_err(),
            Error::NotPrime { n: 9, factor: 3, cofactor: 3 }
        );
        assert_eq!(fermat_check(9, 5).unwrap_err().to_string(), "9 is not prime: 9 = 3\u{b7}3");
        assert!(fermat_check(1, 5).is_err());
        let (_, rows) = fermat_rows(5, 3).unwrap();
        assert_eq!(rows[3].orbit_count, ratio(6, 1)); // (32 + 8)/5 - 2
    }

    fn arb_multigraph(max_n: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
        (1..=max_n).prop_flat_map(move |n| {
            prop::collection::vec((0..n, 0..n), 0..=max_e)
                .prop_map(move |edges| Multigraph::with_edges(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn edge_order_independence(g in arb_multigraph(7, 12), seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let shuffled = chromatic_polynomial_with(&g, &mut |edges: &[Edge]| rng.gen_range(0..edges.len()));
            prop_assert_eq!(shuffled, chromatic_polynomial(&g));
        }

        #[test]
        fn simplify_preserves_chromatic(g in arb_multigraph(7, 12)) {
            prop_assert_eq!(chromatic_polynomial(&g.simplify()), chromatic_polynomial(&g));
        }

        #[test]
        fn degree_is_vertex_count(g in arb_multigraph(7, 12)) {
            let p = chromatic_polynomial(&g);
            if g.has_loop() {
                prop_assert!(p.is_zero());
            } else {
                prop_assert_eq!(p.degree(), Some(g.vertex_count()));
                prop_assert!(p.coeffs().iter().all(|c| c.is_integer()));
            }
        }
    }
}
