//! Command-line driver: tables of every polynomial family, identity
//! verification grids, and a benchmark of the Spivey decomposition against
//! direct series extraction.
//!
//! Exit codes: 0 success, 1 identity or assertion failure, 2 usage or parse
//! error, 3 I/O error.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use degbell::identities::{GridBounds, IdentityId};
use degbell::moments::RandomVariable;

pub mod bench;
pub mod table;
pub mod verify;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum CliError {
    /// Bad flag, value or random-variable spec.
    Usage(String),
    Io { path: String, source: std::io::Error },
    /// An identity cell or a benchmark cross-check did not hold.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Io { path, source } => write!(f, "error: cannot write {path}: {source}"),
            CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Parser)]
#[command(name = "degbell", version, about = "Degenerate and probabilistic Bell polynomial engine")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a table of one polynomial family.
    Table(TableArgs),
    /// Check identities over a parameter grid and write a JSON report.
    Verify(VerifyArgs),
    /// Time Spivey-decomposition reuse against direct series extraction.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Degenerate Stirling numbers of the second kind.
    StirlingDeg,
    /// Degenerate Bell polynomials.
    BellDeg,
    /// Degenerate r-Stirling numbers.
    StirlingRDeg,
    /// Degenerate r-Bell polynomials.
    BellRDeg,
    /// Probabilistic degenerate Stirling numbers.
    StirlingProb,
    /// Probabilistic degenerate Bell polynomials.
    BellProb,
    /// Probabilistic degenerate r-Stirling numbers.
    StirlingRProb,
    /// Probabilistic degenerate r-Bell polynomials.
    BellRProb,
}

impl Family {
    pub fn uses_rv(self) -> bool {
        matches!(
            self,
            Family::StirlingProb | Family::BellProb | Family::StirlingRProb | Family::BellRProb
        )
    }

    pub fn uses_r(self) -> bool {
        matches!(
            self,
            Family::StirlingRDeg | Family::BellRDeg | Family::StirlingRProb | Family::BellRProb
        )
    }

    pub fn is_stirling(self) -> bool {
        matches!(
            self,
            Family::StirlingDeg | Family::StirlingRDeg | Family::StirlingProb | Family::StirlingRProb
        )
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Random-variable spec, e.g. `poisson:1` (repeatable).
    #[arg(long = "rv")]
    pub rvs: Vec<String>,
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    pub n_max: usize,
    /// r values for the r-families (repeatable).
    #[arg(long = "r", allow_hyphen_values = true)]
    pub r: Vec<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Comma-separated identities or `all`: report ids such as `thm21`, or
    /// `prob-spivey`, `prob-spivey-at-one`, `prob-r-spivey`, `r-spivey`,
    /// `deg-spivey`, `gould-quaintance`, `spivey`, `r-stirling-decomposition`,
    /// `composition-formula`, `prob-bell-recurrence`.
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// Random-variable spec (repeatable); the standard suite when omitted.
    #[arg(long = "rv")]
    pub rvs: Vec<String>,
    /// Bound on n + l (or n + j), and on n for the structural checks.
    #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
    pub sum_max: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub l_max: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub j_max: Option<usize>,
    /// r values (repeatable); 1, 2 and 3 when omitted.
    #[arg(long = "r", allow_hyphen_values = true)]
    pub r: Vec<u32>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub workers: usize,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Corrupts the first cell's right-hand side to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Random-variable spec (repeatable); `poisson:1` when omitted.
    #[arg(long = "rv")]
    pub rvs: Vec<String>,
    /// Bound on n + l.
    #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
    pub sum_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Perturbs the Spivey-strategy result to exercise the mismatch path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Validated settings of one run, echoed into verify reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    pub rv: Vec<String>,
    #[serde(flatten)]
    pub bounds: GridBounds,
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    pub workers: usize,
}

pub fn parse_rvs(specs: &[String]) -> Result<Vec<Arc<RandomVariable>>, CliError> {
    specs
        .iter()
        .map(|s| {
            s.parse::<RandomVariable>()
                .map(Arc::new)
                .map_err(|e| CliError::Usage(format!("--rv {s}: {e}")))
        })
        .collect()
}

pub fn check_r_values(r: &[u32]) -> Result<(), CliError> {
    if r.contains(&0) {
        return Err(CliError::Usage("--r must be at least 1".into()));
    }
    Ok(())
}

pub fn parse_identities(selector: &str) -> Result<Vec<IdentityId>, CliError> {
    if selector.eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    selector
        .split(',')
        .map(|s| s.parse::<IdentityId>().map_err(|e| CliError::Usage(format!("--identity: {e}"))))
        .collect()
}

/// Writes `bytes` to `out`, or to standard output when `out` is `None`.
pub fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("serializable");
    bytes.push(b'\n');
    bytes
}

pub(crate) fn to_csv<T: Serialize>(rows: &[T]) -> Vec<u8> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("serializable row");
    }
    writer.into_inner().expect("in-memory writer")
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table(args) => table::run_table(&args),
        Command::Verify(args) => verify::run_verify(&args),
        Command::Bench(args) => bench::run_bench(&args),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
