//! Command-line front end: generate, verify, aop, scan and bench.
//!
//! Exit codes are shared by every subcommand: 0 when the check passes,
//! 1 when a verification fails, 2 for usage or format errors.

pub mod bench;
pub mod commands;
pub mod document;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Document(#[from] document::DocumentError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "perfseq", version, about = "Perfect periodic autocorrelation sequences over roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a sequence document for a construction.
    Generate(GenerateArgs),
    /// Check perfect periodic autocorrelation.
    Verify(VerifyArgs),
    /// Check the array orthogonality property for a divisor.
    Aop(AopArgs),
    /// Run every check over a parameter grid.
    Scan(ScanArgs),
    /// Time FFT autocorrelation on random and constructed sequences.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionName {
    BlakeTirkel,
    Frank,
    Chu,
    Milewski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Fft,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Csv,
}

/// A construction given either positionally or with `--construction`.
#[derive(Debug, Clone, Args)]
pub struct ConstructionArgs {
    #[arg(value_enum, value_name = "CONSTRUCTION")]
    pub construction: Option<ConstructionName>,
    #[arg(long = "construction", value_enum, conflicts_with = "construction")]
    pub construction_flag: Option<ConstructionName>,
    #[arg(short = 'n')]
    pub n: Option<u64>,
    #[arg(short = 'm')]
    pub m: Option<u64>,
    #[arg(short = 'k')]
    pub k: Option<u64>,
}

impl ConstructionArgs {
    pub fn name(&self) -> Option<ConstructionName> {
        self.construction.or(self.construction_flag)
    }
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub source: ConstructionArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Output file; standard output when omitted.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: ConstructionArgs,
    /// Sequence document (JSON or CSV) to verify instead of a construction.
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: Mode,
    /// Length cap for the exact check.
    #[arg(long, default_value_t = perfseq::correlation::DEFAULT_EXACT_MAX_LENGTH)]
    pub max_length: usize,
}

#[derive(Debug, Clone, Args)]
pub struct AopArgs {
    #[command(flatten)]
    pub source: ConstructionArgs,
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    #[arg(long, short = 'd', default_value_t = 2)]
    pub divisor: usize,
    #[arg(long, default_value_t = perfseq::correlation::DEFAULT_EXACT_MAX_LENGTH)]
    pub max_length: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Largest n in the grid.
    #[arg(short = 'n', default_value_t = 4)]
    pub n_max: u64,
    /// Largest m in the grid.
    #[arg(short = 'm', default_value_t = 3)]
    pub m_max: u64,
    /// Largest k in the grid.
    #[arg(short = 'k', default_value_t = 2)]
    pub k_max: u64,
    /// Skip parameter sets whose length exceeds this.
    #[arg(long, default_value_t = 5000)]
    pub max_length: u64,
    /// Leave out the Frank and Chu rows.
    #[arg(long)]
    pub no_baselines: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Smallest length exponent e (length 2^e).
    #[arg(long, default_value_t = 10)]
    pub min_exp: u32,
    /// Largest length exponent.
    #[arg(long, default_value_t = 16)]
    pub max_exp: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: TableFormat,
}

pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Generate(args) => commands::generate(args, out),
        Command::Verify(args) => commands::verify(args, out),
        Command::Aop(args) => commands::aop(args, out),
        Command::Scan(args) => commands::scan(args, out),
        Command::Bench(args) => bench::bench(args, out),
    }
}
