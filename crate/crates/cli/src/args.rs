use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Pure Fisher-Hartwig Toeplitz determinants: evaluation, sweeps and self-checks.
#[derive(Debug, Parser)]
#[command(name = "fhdet", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D_n for one parameter pair with one or all methods.
    Eval(EvalArgs),
    /// Print Fourier coefficients φ_k for a range of k.
    Coeffs(CoeffsArgs),
    /// Evaluate a grid of parameters, optionally in parallel.
    Sweep(SweepArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

pub const METHOD_NAMES: [&str; 6] = ["lu", "closed", "product", "exact-m", "proof2", "all"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StreamFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Exponent α: `p/q` or an integer for exact input, a decimal for float input.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Exponent β, same syntax as α.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Matrix order.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "all", value_parser = METHOD_NAMES)]
    pub method: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub kmin: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub kmax: i64,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid for α as `start:stop:step`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha", required_unless_present = "alpha")]
    pub alpha_range: Option<String>,
    /// Single α value.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Grid for β as `start:stop:step`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "beta", required_unless_present = "beta")]
    pub beta_range: Option<String>,
    /// Single β value.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Comma-separated matrix orders.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long, default_value = "closed", value_parser = METHOD_NAMES)]
    pub method: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = StreamFormat::Csv)]
    pub format: StreamFormat,
    /// Record wall-clock time per point (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// PRNG seed; the FHDET_SEED environment variable takes precedence.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub nmax_exact: usize,
    #[arg(long, default_value_t = 64)]
    pub nmax_float: usize,
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}
