//! Command-line front end: orders, involution counts, generating-function
//! checks, limits, the brute-force oracle and the reference-table fixtures.

pub mod commands;
pub mod fixtures;
pub mod output;

use std::path::PathBuf;

use atlas_asymptotics::AsymError;
use atlas_exact::ExactError;
use atlas_involutions::{Branch, InvolutionError};
use atlas_oracle::OracleError;
use atlas_orders::{CharParity, Family, Sign, SpecError};
use atlas_qseries::SeriesError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use output::{Format, Report, Status};

/// Exit code for usage and precondition errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Count(#[from] InvolutionError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Asym(#[from] AsymError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "involution-atlas", version, about = "Involution counts in finite orthogonal and symplectic groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group order, at a given q or as a polynomial in q.
    Order(GroupArgs),
    /// Number of involutions (identity included) in a group or coset.
    Involutions(InvolutionArgs),
    /// Check a generating-function identity coefficient by coefficient.
    GfVerify(GfArgs),
    /// Normalised counts against their limit as the dimension grows.
    Asym(AsymArgs),
    /// Build the group explicitly and recount its involutions.
    Oracle(OracleArgs),
    /// Recompute the reference tables and diff against the fixtures.
    Tables(TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// O+, O-, O, SO+, SO-, SO, Omega+, Omega-, Omega, Sp (or the long ids).
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, conflicts_with = "symbolic")]
    pub q: Option<u64>,
    /// Keep q formal.
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long)]
    pub char_parity: Option<CharParity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CosetOf {
    #[value(name = "SO")]
    So,
    #[value(name = "Omega")]
    Omega,
}

#[derive(Debug, Clone, Args)]
pub struct InvolutionArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Count in O^± minus this subgroup instead (family must be O+ or O-).
    #[arg(long, value_enum)]
    pub coset: Option<CosetOf>,
    /// 1mod4 or 3mod4: which Omega formula to use with q odd and symbolic.
    #[arg(long)]
    pub branch: Option<Branch>,
}

#[derive(Debug, Clone, Args)]
pub struct GfArgs {
    /// Theorem label; every theorem when omitted.
    #[arg(long)]
    pub theorem: Option<String>,
    /// plus or minus; every sign the theorem carries when omitted.
    #[arg(long)]
    pub sign: Option<Sign>,
    #[arg(long, default_value_t = atlas_qseries::DEFAULT_TRUNC)]
    pub max_n: usize,
    /// Use the right side of 6.7 exactly as printed.
    #[arg(long)]
    pub printed: bool,
}

#[derive(Debug, Clone, Args)]
pub struct AsymArgs {
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub q: u64,
    #[arg(long, default_value_t = 24)]
    pub max_dim: usize,
    /// Accuracy of the limit itself.
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    /// Which type's counts fill the rows.
    #[arg(long, default_value = "plus")]
    pub sign: Sign,
    /// Exit 1 unless the last row is within this distance of the limit.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub q: u64,
    /// Element cap; defaults to INVOLUTION_ATLAS_CAP or 1000000.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Write the full isometry group to this file.
    #[arg(long)]
    pub dump: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Sp,
    Omega,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub table: TableKind,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
}

pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Order(a) => commands::order(a),
        Command::Involutions(a) => commands::involutions(a),
        Command::GfVerify(a) => commands::gf_verify(a),
        Command::Asym(a) => commands::asym(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Tables(a) => commands::tables(a),
    }
}

/// Parse, run and render; returns stdout, stderr and the exit code.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, code) };
        }
    };
    match execute(&cli.command) {
        Ok(r) => (r.render(cli.format), String::new(), r.status.exit_code()),
        Err(e) => (String::new(), format!("error: {e}"), EXIT_USAGE),
    }
}
