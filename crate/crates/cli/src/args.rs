use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pellbraid::SequenceKind;

#[derive(Debug, Parser)]
#[command(
    name = "pellbraid",
    version,
    about = "GCDs of sums of consecutive Pell-family numbers, with identity sweeps and a brute-force oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Pell,
    Qell,
    Balancing,
    LucasBalancing,
    Cobalancing,
    LucasCobalancing,
}

impl From<Kind> for SequenceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Pell => SequenceKind::Pell,
            Kind::Qell => SequenceKind::AssociatedPell,
            Kind::Balancing => SequenceKind::Balancing,
            Kind::LucasBalancing => SequenceKind::LucasBalancing,
            Kind::Cobalancing => SequenceKind::Cobalancing,
            Kind::LucasCobalancing => SequenceKind::LucasCobalancing,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms of one sequence, or of all six.
    Seq(SeqArgs),
    /// Compare the closed form for a GCD of consecutive sums with the oracle.
    Curl(CurlArgs),
    /// Run identity sweeps; exits 1 if any identity fails.
    Verify(VerifyArgs),
    /// Rebuild one of the four reference tables.
    Tables(TablesArgs),
    /// Test the gcd(Q_k, k) entry-point criterion for every k up to a bound;
    /// exits 3 if a counterexample is found.
    ScanConjecture(ScanArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["kind", "all_kinds"]))]
pub struct SeqArgs {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// All six sequences, one row each.
    #[arg(long)]
    pub all_kinds: bool,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(long, default_value_t = 11)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct CurlArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Window length.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// Power applied to each term.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    /// Number of starting offsets the oracle folds over.
    #[arg(long, default_value_t = pellbraid::DEFAULT_HORIZON as u64, value_parser = clap::value_parser!(u64).range(2..))]
    pub horizon: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Cassini,
    Sums,
    Sigma,
    GcdLemmas,
    Padic,
    Braids,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Upper bound of each sweep's main parameter (k, n, s or ell).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_k: Option<u64>,
    /// Upper bound of the second parameter of two-parameter sweeps (n, r or i).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub which: u8,
    /// Draw which of P or Q each closed form is built from (ascii only, tables 2-4).
    #[arg(long)]
    pub braid: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_k: u64,
}
