use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable holding the default seed for `sample` and `verify`.
pub const SEED_ENV: &str = "SELFDECOMP_SEED";

#[derive(Debug, Parser)]
#[command(name = "selfdecomp", version, about = "Selfdecomposable laws and their background driving variables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the characteristic function or the background driving CF.
    Cf(CfArgs),
    /// Tabulate the distribution function of the background driving variable.
    Bddf(BddfArgs),
    /// Draw a sample batch.
    Sample(SampleArgs),
    /// Moments of a model and of its background driving variable (JSON).
    Moments(MomentsArgs),
    /// Run the identity checks; JSON lines, exit 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Gamma,
    Loggamma,
    Levy,
    Symstable1,
    Besselk,
}

/// A model as a JSON descriptor or as shorthand flags; the descriptor wins.
#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Model descriptor, e.g. '{"kind":"Gamma","params":{"alpha":2,"lambda":3}}'.
    #[arg(long)]
    pub model: Option<String>,
    /// Model family when no descriptor is given.
    #[arg(long)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Lévy location.
    #[arg(long)]
    pub m: Option<f64>,
    /// Lévy scale.
    #[arg(long)]
    pub c: Option<f64>,
    /// Symmetric 1-stable scale.
    #[arg(long)]
    pub scale: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Cf,
    Bdcf,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CfArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t = Which::Cf)]
    pub which: Which,
    /// Comma-separated t values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub t: Vec<f64>,
    /// Evenly spaced t values, `start:end:count`.
    #[arg(long, allow_hyphen_values = true)]
    pub t_range: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct QuadArgs {
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub t_min: Option<f64>,
    #[arg(long)]
    pub max_segments: Option<usize>,
    #[arg(long)]
    pub accel_terms: Option<usize>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BddfArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Comma-separated abscissae.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<f64>,
    /// Evenly spaced abscissae, `start:end:count`.
    #[arg(long, allow_hyphen_values = true)]
    pub a_range: Option<String>,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Generator {
    GammaBdrv,
    Loggamma,
    LoggammaInnovation,
    Besselk,
    BesselkInnovation,
    GammaInnovation,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long = "gen", value_enum)]
    pub generator: Generator,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Innovation factor in (0, 1), for the innovation generators.
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub stream_id: u64,
    /// Last series index kept by the log-gamma series generators.
    #[arg(long, default_value_t = 10_000)]
    pub truncation_n: usize,
    /// Drop the tail-mean correction of the truncated series.
    #[arg(long)]
    pub no_tail_correction: bool,
    /// Series terms drawn one by one before the remainder is drawn jointly.
    #[arg(long, default_value_t = 64)]
    pub direct_terms: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Multiply every tolerance by this factor.
    #[arg(long, default_value_t = 1.0)]
    pub tolerance_scale: f64,
    /// Run only checks whose id starts with one of these (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[arg(long, env = SEED_ENV)]
    pub seed: Option<u64>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
