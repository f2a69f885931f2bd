//! `krspread`: spread, minors and extremal search from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or domain
//! errors.

mod commands;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "krspread", version, about = "Spectral spread of K_r-minor-free graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extreme eigenvalues and spread of one graph.
    Spread(SpreadArgs),
    /// Hadwiger number, optionally with a branch-set certificate.
    Hadwiger(HadwigerArgs),
    /// Exhaustive spread maximization over K_r-minor-free graphs.
    Search(SearchArgs),
    /// Laurent-expansion accuracy table for H ∨ (n−|H|)K₁, as CSV.
    Series(SeriesArgs),
    /// Run a built-in verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct SpreadArgs {
    /// Graph in graph6 format.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    pub graph6: Option<String>,
    /// Named family instead of a graph6 string.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct HadwigerArgs {
    pub graph6: String,
    /// Print the certificate as JSON.
    #[arg(long)]
    pub cert: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// graph6 file with the candidate graphs (required for n > 7).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output directory; defaults to $KRSPREAD_OUT or the current directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Fail on the first malformed input line instead of skipping it.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value_t = 1)]
    pub shards: usize,
    /// Run the exact minor test on every graph, skipping the edge-count filter.
    #[arg(long)]
    pub no_prescreen: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct SeriesArgs {
    /// Uses H = K_{r−2} unless --H is given.
    #[arg(long, required_unless_present = "h")]
    pub r: Option<usize>,
    #[arg(long)]
    pub n_from: usize,
    #[arg(long)]
    pub n_to: usize,
    /// Base graph H in graph6 format.
    #[arg(long = "H", id = "h")]
    pub h: Option<String>,
    /// Truncation order of the series.
    #[arg(long, default_value_t = kr_spread::join_series::DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Codec,
    Spectral,
    Minor,
    Series,
    Search,
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

/// Failure modes that map onto exit codes.
pub enum Failure {
    Checks,
    Usage(String),
}

impl From<kr_spread::Error> for Failure {
    fn from(e: kr_spread::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Spread(a) => commands::spread(&a),
        Command::Hadwiger(a) => commands::hadwiger(&a),
        Command::Search(a) => commands::search(&a),
        Command::Series(a) => commands::series(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("krspread: {msg}");
            ExitCode::from(2)
        }
    }
}
