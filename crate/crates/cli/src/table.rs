use serde::Serialize;

use degbell::bell::{RStirlingTableDeg, StirlingTableDeg};
use degbell::moments::RandomVariable;
use degbell::prob_bell::{prob_bell_deg, prob_bell_r_deg, prob_stirling2_deg_row, prob_stirling2_r_deg};

use crate::{check_r_values, parse_rvs, to_csv, to_json, write_output, CliError, Family, Format, TableArgs};

/// One table entry; indices that do not apply to the family are omitted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TableRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rv: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub poly: String,
}

/// CSV form with a fixed column set.
#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    k: Option<usize>,
    r: Option<u32>,
    rv: Option<&'a str>,
    poly: &'a str,
}

fn rows_for(family: Family, n_max: usize, r: u32, rv: Option<&RandomVariable>) -> Vec<TableRow> {
    let rv_name = rv.map(|v| v.to_string());
    let r_field = family.uses_r().then_some(r);
    let mut rows = Vec::new();
    let mut push = |n: usize, k: Option<usize>, poly: String| {
        rows.push(TableRow { rv: rv_name.clone(), r: r_field, n, k, poly });
    };
    match family {
        Family::StirlingDeg | Family::BellDeg => {
            let table = StirlingTableDeg::new(n_max);
            for n in 0..=n_max {
                if family.is_stirling() {
                    for (k, v) in table.row(n).iter().enumerate() {
                        push(n, Some(k), v.to_string());
                    }
                } else {
                    push(n, None, table.bell(n).to_string());
                }
            }
        }
        Family::StirlingRDeg | Family::BellRDeg => {
            let table = RStirlingTableDeg::new(n_max, r);
            for n in 0..=n_max {
                if family.is_stirling() {
                    for (k, v) in table.row(n).iter().enumerate() {
                        push(n, Some(k), v.to_string());
                    }
                } else {
                    push(n, None, table.bell(n).to_string());
                }
            }
        }
        Family::StirlingProb => {
            let rv = rv.expect("rv");
            for n in 0..=n_max {
                for (k, v) in prob_stirling2_deg_row(rv, n).iter().enumerate() {
                    push(n, Some(k), v.to_string());
                }
            }
        }
        Family::BellProb => {
            let rv = rv.expect("rv");
            for n in 0..=n_max {
                push(n, None, prob_bell_deg(rv, n).to_string());
            }
        }
        Family::StirlingRProb => {
            let rv = rv.expect("rv");
            for n in 0..=n_max {
                for k in 0..=n {
                    push(n, Some(k), prob_stirling2_r_deg(rv, n, k, r).to_string());
                }
            }
        }
        Family::BellRProb => {
            let rv = rv.expect("rv");
            for n in 0..=n_max {
                push(n, None, prob_bell_r_deg(rv, n, r).to_string());
            }
        }
    }
    rows
}

/// Builds the sorted rows requested by `args`.
pub fn build_table(args: &TableArgs) -> Result<Vec<TableRow>, CliError> {
    let rvs = parse_rvs(&args.rvs)?;
    if args.family.uses_rv() && rvs.is_empty() {
        return Err(CliError::Usage("--rv is required for probabilistic families".into()));
    }
    check_r_values(&args.r)?;
    let r_values = if args.family.uses_r() && !args.r.is_empty() { args.r.clone() } else { vec![1] };
    let mut rows = Vec::new();
    for &r in &r_values {
        if args.family.uses_rv() {
            for rv in &rvs {
                rows.extend(rows_for(args.family, args.n_max, r, Some(rv)));
            }
        } else {
            rows.extend(rows_for(args.family, args.n_max, r, None));
        }
    }
    rows.sort();
    rows.dedup();
    Ok(rows)
}

pub fn render_table(rows: &[TableRow], format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let flat: Vec<CsvRow<'_>> = rows
                .iter()
                .map(|r| CsvRow { n: r.n, k: r.k, r: r.r, rv: r.rv.as_deref(), poly: &r.poly })
                .collect();
            to_csv(&flat)
        }
    }
}

pub fn run_table(args: &TableArgs) -> Result<(), CliError> {
    let rows = build_table(args)?;
    write_output(args.output.out.as_deref(), &render_table(&rows, args.output.format))
}
