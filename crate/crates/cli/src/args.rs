use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use arithstruct::theorems::TheoremId;
use arithstruct::GraphKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "arithstruct", version, about = "Arithmetical structures on cycles: enumeration, spectra, checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the catalog of structures on one graph size (or a range)
    Enumerate(EnumerateArgs),
    /// r-vector and spectral radius of one d-vector
    Spectra(SpectraArgs),
    /// One row per symmetry class, sorted by spectral radius
    Table(TableArgs),
    /// Run theorem checks and print a JSON report
    Verify(VerifyArgs),
    /// Counts per n, optionally up to symmetry
    Count(CountArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphArg {
    Cycle,
    Path,
}

impl From<GraphArg> for GraphKind {
    fn from(g: GraphArg) -> GraphKind {
        match g {
            GraphArg::Cycle => GraphKind::Cycle,
            GraphArg::Path => GraphKind::Path,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogFormat {
    Jsonl,
    Csv,
    Md,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Min,
    #[value(name = "nonlap-gt4")]
    NonlapGt4,
    #[value(name = "lemma-M", alias = "lemma-m")]
    LemmaM,
    D313,
    DBound,
    Families,
    DStar,
    Discard,
    Max,
    Eigvec,
    All,
}

impl TheoremArg {
    pub fn ids(self) -> Vec<TheoremId> {
        let one = match self {
            TheoremArg::All => return TheoremId::ALL.to_vec(),
            TheoremArg::Min => TheoremId::Min,
            TheoremArg::NonlapGt4 => TheoremId::NonlapGt4,
            TheoremArg::LemmaM => TheoremId::LemmaM,
            TheoremArg::D313 => TheoremId::D313,
            TheoremArg::DBound => TheoremId::DBound,
            TheoremArg::Families => TheoremId::Families,
            TheoremArg::DStar => TheoremId::DStar,
            TheoremArg::Discard => TheoremId::Discard,
            TheoremArg::Max => TheoremId::Max,
            TheoremArg::Eigvec => TheoremId::Eigvec,
        };
        vec![one]
    }
}

/// Inclusive range written `a..b`, `a..=b` or a single `a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct NRange {
    pub first: usize,
    pub last: usize,
}

impl NRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.first, self.last)
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (first, last) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if first > last {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange { first, last })
    }
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = GraphArg::Cycle)]
    pub graph: GraphArg,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    pub n: Option<usize>,
    /// Inclusive, e.g. 3..8
    #[arg(long)]
    pub n_range: Option<NRange>,
    /// One canonical representative per orbit, with its orbit size
    #[arg(long)]
    pub up_to_symmetry: bool,
    #[arg(long, value_enum, default_value_t = CatalogFormat::Jsonl)]
    pub format: CatalogFormat,
    /// Write here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Catalog cache directory (default: $ARITH_CACHE_DIR)
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

impl EnumerateArgs {
    pub fn range(&self) -> NRange {
        match (self.n, self.n_range) {
            (Some(n), _) => NRange { first: n, last: n },
            (None, Some(r)) => r,
            (None, None) => unreachable!("clap requires one of --n, --n-range"),
        }
    }
}

#[derive(Args, Debug)]
pub struct SpectraArgs {
    /// Comma-separated d-vector, e.g. 1,8,2,2,2,2
    #[arg(long, value_delimiter = ',', required = true)]
    pub d: Vec<u64>,
    #[arg(long, value_enum, default_value_t = GraphArg::Cycle)]
    pub graph: GraphArg,
    /// Print every eigenvalue
    #[arg(long)]
    pub full: bool,
    /// Print the top eigenvector
    #[arg(long)]
    pub eigvec: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Md)]
    pub format: TableFormat,
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = TheoremArg::All)]
    pub theorem: TheoremArg,
    #[arg(long, default_value = "3..10")]
    pub n_range: NRange,
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

impl VerifyArgs {
    pub fn theorem_name(&self) -> String {
        self.theorem.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = GraphArg::Cycle)]
    pub graph: GraphArg,
    #[arg(long)]
    pub n_range: NRange,
    #[arg(long)]
    pub up_to_symmetry: bool,
    #[arg(long)]
    pub cache: Option<PathBuf>,
}
