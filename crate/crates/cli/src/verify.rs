use rayon::prelude::*;
use serde::Serialize;

use degbell::identities::{grid_cells, summarize, Cell, GridBounds, VerificationReport};
use degbell::moments::RandomVariable;
use std::sync::Arc;

use crate::{
    check_r_values, parse_identities, parse_rvs, to_csv, to_json, write_output, CliError, Format, RunConfig,
    VerifyArgs, TOOL_VERSION,
};

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub tool_version: &'static str,
    pub config_echo: RunConfig,
    pub cells: Vec<VerificationReport>,
    pub failures: usize,
}

#[derive(Serialize)]
struct CsvCell<'a> {
    identity_id: &'static str,
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    j: Option<usize>,
    r: Option<u32>,
    rv: Option<&'a str>,
    equal: bool,
    lhs: &'a str,
    rhs: &'a str,
}

fn config_echo(args: &VerifyArgs, rvs: &[Arc<RandomVariable>], bounds: &GridBounds) -> RunConfig {
    RunConfig {
        command: "verify",
        family: None,
        identity: Some(args.identity.clone()),
        rv: rvs.iter().map(|v| v.to_string()).collect(),
        bounds: bounds.clone(),
        format: args.output.format,
        out: args.output.out.as_ref().map(|p| p.display().to_string()),
        workers: args.workers,
    }
}

/// Runs every cell on a pool of `workers` threads and returns the reports
/// in canonical order.
pub fn run_cells(cells: &[Cell], workers: usize) -> Vec<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let mut reports: Vec<VerificationReport> = pool.install(|| cells.par_iter().map(Cell::run).collect());
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    reports
}

/// Evaluates the grid described by `args`.
pub fn build_report(args: &VerifyArgs) -> Result<VerifyOutput, CliError> {
    if args.workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    check_r_values(&args.r)?;
    let identities = parse_identities(&args.identity)?;
    let rvs = if args.rvs.is_empty() {
        RandomVariable::standard_suite().into_iter().map(Arc::new).collect()
    } else {
        parse_rvs(&args.rvs)?
    };
    let mut bounds = GridBounds {
        sum_max: args.sum_max,
        n_max: args.n_max,
        l_max: args.l_max,
        j_max: args.j_max,
        ..GridBounds::default()
    };
    if !args.r.is_empty() {
        let mut r = args.r.clone();
        r.sort_unstable();
        r.dedup();
        bounds.r_values = r;
    }
    let cells: Vec<Cell> = identities
        .iter()
        .flat_map(|&id| grid_cells(id, &bounds, &rvs))
        .collect();
    let mut reports = run_cells(&cells, args.workers);
    if args.inject_fault {
        if let Some(first) = reports.first_mut() {
            first.rhs.push_str(" + 1");
            first.equal = first.lhs == first.rhs;
        }
    }
    let (_, failures) = summarize(&reports);
    Ok(VerifyOutput {
        tool_version: TOOL_VERSION,
        config_echo: config_echo(args, &rvs, &bounds),
        cells: reports,
        failures,
    })
}

pub fn render_report(output: &VerifyOutput, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(output),
        Format::Csv => {
            let rows: Vec<CsvCell<'_>> = output
                .cells
                .iter()
                .map(|c| CsvCell {
                    identity_id: c.identity_id.as_str(),
                    n: c.params.n,
                    k: c.params.k,
                    l: c.params.l,
                    j: c.params.j,
                    r: c.params.r,
                    rv: c.params.rv.as_deref(),
                    equal: c.equal,
                    lhs: &c.lhs,
                    rhs: &c.rhs,
                })
                .collect();
            to_csv(&rows)
        }
    }
}

pub fn run_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let output = build_report(args)?;
    write_output(args.output.out.as_deref(), &render_report(&output, args.output.format))?;
    let summary = format!("checked {} cells, {} failures", output.cells.len(), output.failures);
    // keep stdout clean for the report when it is written there
    if args.output.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    if output.failures > 0 {
        let failed: Vec<String> = output
            .cells
            .iter()
            .filter(|c| !c.equal)
            .map(|c| format!("{} {:?}\n  lhs: {}\n  rhs: {}", c.identity_id, c.params, c.lhs, c.rhs))
            .collect();
        return Err(CliError::Failure(failed.join("\n")));
    }
    Ok(())
}
