use std::path::PathBuf;

use christoffel_entropy::asymptotics::RationalAngle;
use christoffel_entropy::orthopoly::ChebKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "chentropy",
    version,
    about = "Entropy of Christoffel-normalized orthogonal polynomial distributions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy and divergence of Ψ_n(x) at one point.
    Entropy(PointArgs),
    /// Limiting divergence at a declared angle.
    Limit(LimitArgs),
    /// Entropies at Chebyshev zeros, or gaps along a zero subsequence.
    Zeros(ZerosArgs),
    /// Run the identity and closed-form checks against a tolerance.
    Verify(VerifyArgs),
    /// Entropy table over an x grid and an n schedule.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    /// Exponent of (1−x).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Exponent of (1+x).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Chebyshev-T coefficients of log h, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1..)]
    pub logh_coeffs: Option<Vec<f64>>,
    /// JSON weight file: {"alpha": .., "beta": .., "logh_cheb": [..]}.
    #[arg(long)]
    pub weight: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct AngleArgs {
    /// θ/π as a reduced fraction s/k (rational case).
    #[arg(long, value_parser = parse_angle)]
    pub angle: Option<RationalAngle>,
    /// θ in radians, declared to have θ/π irrational.
    #[arg(long)]
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct DegreeArgs {
    /// Number of polynomials (distribution size).
    #[arg(long, conflicts_with = "n_schedule")]
    pub n: Option<usize>,
    /// Strictly increasing list of n, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub n_schedule: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[command(flatten)]
    pub angle: AngleArgs,
    /// Evaluation point in (−1, 1); excludes --angle/--theta.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["angle", "theta"])]
    pub x: Option<f64>,
    #[command(flatten)]
    pub degrees: DegreeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[command(flatten)]
    pub angle: AngleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_parser = parse_kind, default_value = "T")]
    pub kind: ChebKind,
    /// Degree whose zeros are tabulated.
    #[arg(long, conflicts_with = "lambda")]
    pub n: Option<usize>,
    /// Subsequence 1–4 along which the gap is tabulated (needs an angle).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub lambda: Option<u8>,
    /// Number of subsequence items.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[command(flatten)]
    pub angle: AngleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest accepted discrepancy.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest degree for the closed-form zero check.
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[command(flatten)]
    pub angle: AngleArgs,
    /// Single evaluation point; excludes --x-grid and the angle flags.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["x_grid", "angle", "theta"])]
    pub x: Option<f64>,
    /// Grid a:b:step inside (−1, 1).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["angle", "theta"])]
    pub x_grid: Option<String>,
    #[command(flatten)]
    pub degrees: DegreeArgs,
    /// Run grid points sequentially.
    #[arg(long)]
    pub sequential: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_angle(s: &str) -> Result<RationalAngle, String> {
    s.parse()
        .map_err(|e: christoffel_entropy::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<ChebKind, String> {
    s.parse()
        .map_err(|e: christoffel_entropy::Error| e.to_string())
}
