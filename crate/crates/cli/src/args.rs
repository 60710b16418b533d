use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Reciprocal conjugacy classes in Hecke groups: enumeration, exact counts and estimates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List reciprocal classes up to a length.
    Enumerate(EnumerateArgs),
    /// Exact reciprocal class counts.
    Count(CountArgs),
    /// Growth-formula estimates.
    Estimate(EstimateArgs),
    /// Exact counts, recurrence counts and estimates side by side.
    Compare(CompareArgs),
    /// Run the consistency checks; exits 1 if any fails.
    Verify(VerifyArgs),
    /// Share of primitive classes.
    PrimitiveRatio(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Comma-separated values of p.
    #[arg(long = "p", value_delimiter = ',', required = true, num_args = 1..)]
    pub p: Vec<u32>,

    /// Length bound.
    #[arg(long, conflicts_with = "lengths")]
    pub max_length: Option<u32>,

    /// Comma-separated length bounds.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub lengths: Vec<u32>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Enumeration threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: u16,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    #[arg(long, value_enum, default_value_t = Method::Enumerate)]
    pub method: Method,

    /// One tab-separated line per class.
    #[arg(long, conflicts_with = "format")]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    #[arg(long, value_enum, default_value_t = Method::Enumerate)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Defaults to thm1 for odd p and thm2 for even p.
    #[arg(long, value_enum)]
    pub formula: Option<Formula>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Defaults to thm1 for odd p and thm2 for even p.
    #[arg(long, value_enum)]
    pub formula: Option<Formula>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumerate,
    Oracle,
    Dp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Thm1,
    Thm2,
    Lemma42,
    Lemma43,
    Modular,
}

impl Formula {
    pub fn as_str(&self) -> &'static str {
        match self {
            Formula::Thm1 => "thm1",
            Formula::Thm2 => "thm2",
            Formula::Lemma42 => "lemma42",
            Formula::Lemma43 => "lemma43",
            Formula::Modular => "modular",
        }
    }
}
