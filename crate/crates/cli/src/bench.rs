use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use degbell::algebra::MPoly;
use degbell::identities::spivey_from_lower;
use degbell::moments::RandomVariable;
use degbell::prob_bell::{prob_bell_deg, prob_bell_deg_via_exp};

use crate::{parse_rvs, to_csv, to_json, write_output, BenchArgs, CliError, Format};

/// One timed computation of `φ^Y_{n+l,λ}(y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BenchRow {
    pub strategy: &'static str,
    pub n: usize,
    pub l: usize,
    pub rv: String,
    pub wall_time_ns: u64,
}

/// Reuses cached `φ_m`, `m ≤ l`, through the Spivey decomposition.
pub const SPIVEY: &str = "spivey";
/// Extracts the coefficient of `exp(y(E[e_λ^Y(t)] − 1))` from scratch.
pub const DIRECT: &str = "direct";

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let value = f();
    let ns = start.elapsed().as_nanos().min(u64::MAX as u128) as u64;
    (value, ns.max(1))
}

fn bench_cell(rv: &RandomVariable, n: usize, l: usize, inject_fault: bool) -> Result<[BenchRow; 2], CliError> {
    // fresh models so neither strategy inherits the other's moment cache
    let cached = rv.clone();
    let lower: Vec<MPoly> = (0..=l).map(|m| prob_bell_deg(&cached, m)).collect();
    let (mut via_spivey, spivey_ns) = timed(|| spivey_from_lower(&cached, n, l, &lower));
    let fresh = rv.clone();
    let (via_direct, direct_ns) = timed(|| prob_bell_deg_via_exp(&fresh, n + l));
    if inject_fault {
        via_spivey += &MPoly::one();
    }
    if via_spivey != via_direct {
        return Err(CliError::Failure(format!(
            "strategy mismatch for {rv} n={n} l={l}\n- {SPIVEY}: {via_spivey}\n+ {DIRECT}: {via_direct}"
        )));
    }
    let row = |strategy, wall_time_ns| BenchRow { strategy, n, l, rv: rv.to_string(), wall_time_ns };
    Ok([row(SPIVEY, spivey_ns), row(DIRECT, direct_ns)])
}

/// Times both strategies on every `(n, l)` with `n + l ≤ sum_max`, failing
/// on the first cell where their results differ.
pub fn build_bench(args: &BenchArgs) -> Result<Vec<BenchRow>, CliError> {
    let rvs = if args.rvs.is_empty() {
        vec![Arc::new("poisson:1".parse::<RandomVariable>().expect("valid spec"))]
    } else {
        parse_rvs(&args.rvs)?
    };
    let mut rows = Vec::new();
    let mut fault = args.inject_fault;
    for rv in &rvs {
        for n in 0..=args.sum_max {
            for l in 0..=args.sum_max - n {
                rows.extend(bench_cell(rv, n, l, fault)?);
                fault = false;
            }
        }
    }
    rows.sort();
    Ok(rows)
}

pub fn run_bench(args: &BenchArgs) -> Result<(), CliError> {
    let rows = build_bench(args)?;
    let bytes = match args.format {
        Format::Csv => to_csv(&rows),
        Format::Json => to_json(&rows),
    };
    write_output(args.out.as_deref(), &bytes)
}
