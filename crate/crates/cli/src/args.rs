use crate::numeric;
use binocert::Rational;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "binocert", version, about = "Certified binomial window probabilities and their Gaussian bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify one instance and print its report
    Certify(CertifyArgs),
    /// Certify a grid of instances and write one CSV row per instance
    Sweep(SweepArgs),
    /// Wallis integrals, their identities and the central-term sandwiches
    Wallis(WallisArgs),
    /// Exact pmf of B(n, p) next to the matching Gaussian density
    Hist(HistArgs),
    /// Check the elementary inequalities on their rational grids
    Lemmas(LemmaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Mode {
    /// `S_{2n}`, `--n` is the half index
    SymEven,
    /// `S_{2n+1}`, `--n` is the half index
    SymOdd,
    /// any `S_N`, `--n` is the trial count
    Unified,
    General,
    Wallis,
    Lemmas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct PrecisionArgs {
    /// Target enclosure width, e.g. 1e-30 or 1/1000
    #[arg(long, value_name = "WIDTH", default_value = "1e-30", value_parser = numeric::width)]
    pub precision: Rational,

    /// Refinement rounds; working precision doubles each round
    #[arg(long = "max-refine", value_name = "K", default_value = "6", value_parser = numeric::rounds)]
    pub max_refine: u32,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,

    #[arg(long, value_parser = numeric::count)]
    pub n: Option<u64>,

    #[arg(long, value_parser = numeric::rational)]
    pub x: Option<Rational>,

    /// Success probability (general mode)
    #[arg(long, value_parser = numeric::rational)]
    pub p: Option<Rational>,

    #[command(flatten)]
    pub precision: PrecisionArgs,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,

    /// Smallest trial count (the total number of trials in every mode)
    #[arg(long = "n-min", value_parser = numeric::count, default_value = "1")]
    pub n_min: u64,

    #[arg(long = "n-max", value_parser = numeric::count)]
    pub n_max: u64,

    #[arg(long = "n-step", value_parser = numeric::count, default_value = "1")]
    pub n_step: u64,

    /// Comma-separated window half-widths
    #[arg(long, value_delimiter = ',', value_parser = numeric::rational)]
    pub x: Vec<Rational>,

    /// Comma-separated success probabilities (general mode)
    #[arg(long, value_delimiter = ',', value_parser = numeric::rational)]
    pub p: Vec<Rational>,

    #[command(flatten)]
    pub precision: PrecisionArgs,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct WallisArgs {
    #[arg(long, value_parser = numeric::count)]
    pub n: u64,

    #[command(flatten)]
    pub precision: PrecisionArgs,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct HistArgs {
    #[arg(long, value_parser = numeric::count)]
    pub n: u64,

    #[arg(long, value_parser = numeric::rational, default_value = "1/2")]
    pub p: Rational,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    #[command(flatten)]
    pub precision: PrecisionArgs,

    #[command(flatten)]
    pub output: OutputArgs,
}
