//! The `orbchrom` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 parse
//! error, 4 capacity error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::chroma::{
    chromatic_polynomial, cycle_chromatic_closed, cycle_index_rotation_at, fermat_rows,
    orbital_by_definition, orbital_full_closed, orbital_rotation_closed, quotient_graph,
};
use crate::multigraph::{Multigraph, Shape};
use crate::numtheory::{alternating_totient_sum, divisors, gcd, totient};
use crate::oracle::Oracle;
use crate::permgroup::{cycle_automorphisms, CycleSymmetry, PermGroup, Permutation};
use crate::{Error, RationalPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "orbchrom", version, about = "Exact chromatic and orbital chromatic polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    /// Rotations of the cycle.
    Rotation,
    /// Rotations and reflections.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Totient-sum closed form.
    Closed,
    /// Average over quotient graphs.
    Definition,
    /// Brute-force orbit count (needs --lambda).
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial of a graph file.
    Chromatic {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write `x` and `-` instead of `λ` and `−`.
        #[arg(long)]
        ascii: bool,
    },
    /// Orbital chromatic polynomial of the n-cycle.
    Orbital {
        n: usize,
        #[arg(long, value_enum, default_value = "rotation")]
        group: Group,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long)]
        lambda: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        ascii: bool,
    },
    /// Quotient of a graph file by a permutation given as an image list.
    Quotient {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbital polynomials of cycles for n = 1..=max-n: table 1 uses
    /// rotations, table 2 the full automorphism group.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        ascii: bool,
    },
    /// Cross-check closed forms, definitions, shapes and brute-force counts.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_lambda: u64,
    },
    /// Check (λ-1)^p ≡ λ-1 (mod p) through the rotation orbit count.
    Fermat {
        p: u64,
        #[arg(long, default_value_t = 50)]
        max_lambda: u64,
        #[arg(long, short)]
        verbose: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(Outcome { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "orbchrom: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::NotPrime { .. } => EXIT_USAGE,
        Error::Parse(_) => EXIT_PARSE,
        Error::Capacity { .. } => EXIT_CAPACITY,
    }
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

fn execute(cmd: &Command) -> crate::Result<Outcome> {
    match *cmd {
        Command::Chromatic { ref graph, format, ascii } => {
            let g = read_graph(graph)?;
            let p = chromatic_polynomial(&g);
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\n", p.render(ascii)),
                Format::Json => format!("{}\n", p.to_json()),
            }))
        }
        Command::Orbital { n, group, method, lambda, format, ascii } => {
            orbital(n, group, method, lambda, format, ascii).map(Outcome::ok)
        }
        Command::Quotient { ref graph, ref perm, format } => {
            let g = read_graph(graph)?;
            let perm: Permutation = perm.parse()?;
            let q = quotient_graph(&g, &perm)?;
            let shape = describe_shape(q.classify_shape());
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\nshape: {shape}\n", q.to_json()),
                Format::Json => {
                    let graph: Value = serde_json::from_str(&q.to_json()).expect("valid json");
                    format!("{}\n", json!({ "quotient": graph, "shape": shape }))
                }
            }))
        }
        Command::Table { which, max_n, format, ascii } => table(which, max_n as usize, format, ascii).map(Outcome::ok),
        Command::Verify { max_n, max_lambda } => Ok(verify(max_n, max_lambda, Oracle::from_env()?)),
        Command::Fermat { p, max_lambda, verbose } => fermat(p, max_lambda, verbose),
    }
}

fn read_graph(path: &Path) -> crate::Result<Multigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Multigraph::from_json(&text)
}

fn group_for(n: usize, group: Group) -> crate::Result<PermGroup> {
    match group {
        Group::Rotation => PermGroup::rotations(n),
        Group::Full => PermGroup::automorphisms_of_cycle(n),
    }
}

fn group_name(group: Group) -> &'static str {
    match group {
        Group::Rotation => "rotation",
        Group::Full => "full",
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Closed => "closed",
        Method::Definition => "definition",
        Method::Oracle => "oracle",
    }
}

fn rational_json(q: &BigRational) -> Value {
    if q.is_integer() {
        Value::Number(q.to_integer().to_string().parse().expect("integer"))
    } else {
        Value::String(q.to_string())
    }
}

fn orbital(n: usize, group: Group, method: Method, lambda: Option<u64>, format: Format, ascii: bool) -> crate::Result<String> {
    let mut record = json!({ "n": n, "group": group_name(group), "method": method_name(method) });
    let mut text = String::new();
    if method == Method::Oracle {
        let lambda = lambda.ok_or_else(|| Error::domain("--method oracle requires --lambda"))?;
        let g = Multigraph::cycle(n)?;
        let count = Oracle::from_env()?.count_coloring_orbits(&g, &group_for(n, group)?, lambda)?;
        record["lambda"] = json!(lambda);
        record["value"] = json!(count);
        writeln!(text, "{count}").unwrap();
    } else {
        let poly = match (method, group) {
            (Method::Closed, Group::Rotation) => orbital_rotation_closed(n)?,
            (Method::Closed, Group::Full) => orbital_full_closed(n)?,
            _ => orbital_by_definition(&Multigraph::cycle(n)?, &group_for(n, group)?)?,
        };
        record["polynomial"] = serde_json::to_value(&poly).expect("serializable");
        writeln!(text, "{}", poly.render(ascii)).unwrap();
        if let Some(lambda) = lambda {
            let value = poly.eval_int(lambda as i64);
            record["lambda"] = json!(lambda);
            record["value"] = rational_json(&value);
            let var = if ascii { "x" } else { "\u{3bb}" };
            writeln!(text, "at {var} = {lambda}: {value}").unwrap();
        }
    }
    Ok(match format {
        Format::Text => text,
        Format::Json => format!("{record}\n"),
    })
}

fn table(which: u8, max_n: usize, format: TableFormat, ascii: bool) -> crate::Result<String> {
    let rows = (1..=max_n)
        .map(|n| {
            let p = if which == 1 { orbital_rotation_closed(n)? } else { orbital_full_closed(n)? };
            Ok((n, p))
        })
        .collect::<crate::Result<Vec<(usize, RationalPoly)>>>()?;
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            for (n, p) in &rows {
                writeln!(out, "{n:>3}  {}", p.render(ascii)).unwrap();
            }
        }
        TableFormat::Csv => {
            let width = rows.iter().filter_map(|(_, p)| p.degree()).max().map_or(0, |d| d + 1);
            let header: Vec<String> = ["n".to_string(), "den".to_string()]
                .into_iter()
                .chain((0..width).map(|i| format!("c{i}")))
                .collect();
            writeln!(out, "{}", header.join(",")).unwrap();
            for (n, p) in &rows {
                let (den, ints) = p.to_common_denominator();
                let mut cells = vec![n.to_string(), den.to_string()];
                cells.extend((0..width).map(|i| ints.get(i).map_or_else(|| "0".to_string(), ToString::to_string)));
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
        TableFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, p)| {
                    let mut row = serde_json::to_value(p).expect("serializable");
                    row["n"] = json!(n);
                    row
                })
                .collect();
            let group = if which == 1 { "rotation" } else { "full" };
            writeln!(out, "{}", json!({ "table": which, "group": group, "rows": rows })).unwrap();
        }
    }
    Ok(out)
}

fn describe_shape(shape: Shape) -> String {
    match shape {
        Shape::Cycle(k) => format!("cycle of length {k}"),
        Shape::Path { edges, loops } => {
            let loops = match loops {
                (false, false) => "",
                (false, true) => ", loop at one end",
                _ => ", loops at both ends",
            };
            format!("path with {edges} edge{}{loops}", if edges == 1 { "" } else { "s" })
        }
        Shape::Other => "other".to_string(),
    }
}

/// One line of the verification report.
struct SuiteResult {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn suite(name: &'static str, checks: usize, failures: Vec<String>) -> SuiteResult {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{checks} checks")
    } else {
        format!("{} of {checks} checks failed; first: {}", failures.len(), failures[0])
    };
    SuiteResult { name, passed, detail }
}

fn verify(max_n: usize, max_lambda: u64, oracle: Oracle) -> Outcome {
    let results = [
        verify_totient(max_n),
        verify_cycle_chromatic(max_n),
        verify_closed_vs_definition(max_n),
        verify_shapes(max_n),
        verify_cycle_index(max_n),
        verify_oracle(max_n, max_lambda, oracle),
    ];
    let mut text = String::new();
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{tag}  {:<22} {}", r.name, r.detail).unwrap();
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(text, "{} of {} suites passed", results.len() - failed, results.len()).unwrap();
    Outcome { text, code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED } }
}

fn verify_totient(max_n: usize) -> SuiteResult {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=max_n as u64 {
        checks += 2;
        let expected = if n % 2 == 1 { -(n as i64) } else { 0 };
        match alternating_totient_sum(n) {
            Ok(s) if s == expected => {}
            other => failures.push(format!("alternating sum at n = {n}: {other:?}")),
        }
        let divisor_sum: u64 = divisors(n)
            .unwrap_or_default()
            .iter()
            .map(|d| totient(n / d).unwrap_or(0))
            .sum();
        if divisor_sum != n {
            failures.push(format!("divisor sum at n = {n}: {divisor_sum}"));
        }
    }
    suite("totient-identities", checks, failures)
}

fn verify_cycle_chromatic(max_n: usize) -> SuiteResult {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let ok = Multigraph::cycle(n)
            .and_then(|g| Ok(chromatic_polynomial(&g) == cycle_chromatic_closed(n)?))
            .unwrap_or(false);
        if !ok {
            failures.push(format!("n = {n}"));
        }
    }
    suite("cycle-chromatic", max_n, failures)
}

fn verify_closed_vs_definition(max_n: usize) -> SuiteResult {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=max_n {
        for group in [Group::Rotation, Group::Full] {
            checks += 1;
            let ok = (|| -> crate::Result<bool> {
                let closed = match group {
                    Group::Rotation => orbital_rotation_closed(n)?,
                    Group::Full => orbital_full_closed(n)?,
                };
                Ok(orbital_by_definition(&Multigraph::cycle(n)?, &group_for(n, group)?)? == closed)
            })();
            if !matches!(ok, Ok(true)) {
                failures.push(format!("{} group, n = {n}", group_name(group)));
            }
        }
    }
    suite("closed-vs-definition", checks, failures)
}

/// Expected quotient shape of the `n`-cycle by a named symmetry.
pub fn expected_quotient_shape(n: usize, sym: CycleSymmetry) -> Shape {
    match sym {
        CycleSymmetry::Rotation(m) => match gcd(n as u64, m as u64) as usize {
            2 => Shape::Path { edges: 1, loops: (false, false) },
            k => Shape::Cycle(k),
        },
        CycleSymmetry::VertexReflection(_) => Shape::Path { edges: n / 2, loops: (false, n % 2 == 1) },
        CycleSymmetry::EdgeReflection(_) => Shape::Path { edges: n / 2 - 1, loops: (true, true) },
    }
}

fn verify_shapes(max_n: usize) -> SuiteResult {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=max_n {
        let (Ok(g), Ok(elements)) = (Multigraph::cycle(n), cycle_automorphisms(n)) else {
            failures.push(format!("cannot build C_{n}"));
            continue;
        };
        for (sym, perm) in elements {
            checks += 1;
            let shape = quotient_graph(&g, &perm).map(|q| q.classify_shape());
            let expected = expected_quotient_shape(n, sym);
            if shape.as_ref() != Ok(&expected) {
                failures.push(format!("C_{n}/{sym}: got {shape:?}, expected {expected:?}"));
            }
        }
    }
    suite("quotient-shapes", checks, failures)
}

fn verify_cycle_index(max_n: usize) -> SuiteResult {
    let mut failures = Vec::new();
    let shift = RationalPoly::shifted_power(1);
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    for n in 1..=max_n {
        let ok = (|| -> crate::Result<bool> {
            let z = cycle_index_rotation_at(n, &shift)?;
            let (rot, full) = if n % 2 == 1 {
                let rot = &z - &shift;
                let full = rot.scale(&half);
                (rot, full)
            } else {
                let tail = (&RationalPoly::x() * &RationalPoly::shifted_power(n as u32 / 2)).scale(&quarter);
                (z.clone(), &z.scale(&half) + &tail)
            };
            Ok(rot == orbital_rotation_closed(n)? && full == orbital_full_closed(n)?)
        })();
        if !matches!(ok, Ok(true)) {
            failures.push(format!("n = {n}"));
        }
    }
    suite("cycle-index", max_n, failures)
}

fn verify_oracle(max_n: usize, max_lambda: u64, oracle: Oracle) -> SuiteResult {
    let mut failures = Vec::new();
    let mut skipped = Vec::new();
    let mut checks = 0;
    for n in 1..=max_n {
        if n > oracle.max_vertices {
            skipped.push(n);
            continue;
        }
        for group in [Group::Rotation, Group::Full] {
            let polys = (|| -> crate::Result<_> {
                let g = Multigraph::cycle(n)?;
                let grp = group_for(n, group)?;
                let closed = match group {
                    Group::Rotation => orbital_rotation_closed(n)?,
                    Group::Full => orbital_full_closed(n)?,
                };
                let by_definition = orbital_by_definition(&g, &grp)?;
                Ok((g, grp, closed, by_definition))
            })();
            let (g, grp, closed, by_definition) = match polys {
                Ok(v) => v,
                Err(e) => {
                    failures.push(format!("n = {n}: {e}"));
                    continue;
                }
            };
            for lambda in 0..=max_lambda {
                checks += 1;
                let a = closed.eval_int(lambda as i64);
                let b = by_definition.eval_int(lambda as i64);
                match oracle.count_coloring_orbits(&g, &grp, lambda) {
                    Ok(c) if a == b && a == BigRational::from_integer(c.into()) => {}
                    Ok(c) => failures.push(format!(
                        "{} group, n = {n}, lambda = {lambda}: closed {a}, definition {b}, oracle {c}",
                        group_name(group)
                    )),
                    Err(Error::Capacity { .. }) => skipped.push(n),
                    Err(e) => failures.push(format!("n = {n}, lambda = {lambda}: {e}")),
                }
            }
        }
    }
    skipped.dedup();
    let mut result = suite("oracle", checks, failures);
    if result.passed && max_lambda == 0 {
        result.detail.push_str(" (vacuous: no colorings with 0 colors)");
    }
    if !skipped.is_empty() {
        write!(result.detail, "; skipped n = {skipped:?} over the oracle limit").unwrap();
    }
    result
}

fn fermat(p: u64, max_lambda: u64, verbose: bool) -> crate::Result<Outcome> {
    let (ok, rows) = fermat_rows(p, max_lambda)?;
    let mut text = String::new();
    if verbose {
        for row in &rows {
            writeln!(
                text,
                "lambda = {:>3}  residue = {}  orbits = {}  {}",
                row.lambda,
                row.residue,
                row.orbit_count,
                if row.passes() { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
    }
    writeln!(text, "{}  p = {p}, lambda = 0..={max_lambda}", if ok { "PASS" } else { "FAIL" }).unwrap();
    Ok(Outcome { text, code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}
