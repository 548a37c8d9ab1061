//! The command grammar. Every argument struct serializes, so a report can echo
//! the exact configuration that produced it.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "cyclodaha", version, about = "Exact verification of DAHA relations, quasiinvariant series and quiver/bow constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Relation catalogs checked in a polynomial representation.
    #[command(subcommand)]
    Relations(RelationsCmd),
    /// Quasiinvariant Hilbert series and flatness protocols.
    #[command(subcommand)]
    Quasi(QuasiCmd),
    /// Multiplicative quiver points on the cyclic quiver.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Bow data and the Hanany-Witten transition.
    #[command(subcommand)]
    Bow(BowCmd),
    /// Macdonald-type operators on symmetric polynomials.
    #[command(subcommand)]
    Macdonald(MacdonaldCmd),
    /// Run a named battery of checks.
    Suite(SuiteArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationsCmd {
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    Box,
    Random,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// daha, deg-daha, deg-cyc, cyc-daha, l1 or lastrel.
    #[arg(long)]
    pub family: String,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    #[arg(long, value_enum, default_value_t = CheckMode::Box)]
    pub mode: CheckMode,
    /// Box radius; the per-relation default when omitted.
    #[arg(long = "B")]
    #[serde(rename = "B")]
    pub b: Option<i32>,
    #[arg(long, default_value_t = 30)]
    pub trials: usize,
    /// Exponent window of the random monomials.
    #[arg(long, default_value_t = 3)]
    pub window: i32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the per-relation result array here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuasiCmd {
    Series(SeriesArgs),
    Flatness(FlatnessArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct SeriesArgs {
    /// plain-q, cyc, twisted or twisted-q.
    #[arg(long)]
    pub variant: String,
    /// Number of variables; implied by --a for the twisted variants.
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: u32,
    /// Comma-separated twists a_1,...,a_N.
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<String>,
    /// Cyclotomic multiplicities m_1,...,m_{l-1}.
    #[arg(long, value_delimiter = ',')]
    pub mr: Vec<u32>,
    /// Deformation parameter (q, the root of q for cyc, or the base for twisted-q).
    #[arg(long, default_value = "1")]
    pub q: String,
    #[arg(long)]
    pub maxdeg: usize,
    /// Write the series JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct FlatnessArgs {
    /// plain-q, cyc or twisted-q.
    #[arg(long)]
    pub variant: String,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    pub mr: Vec<u32>,
    #[arg(long)]
    pub maxdeg: usize,
    /// Number of deformation samples.
    #[arg(long, default_value_t = 3)]
    pub seeds: u64,
    /// First sample seed; samples use seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuiverCmd {
    Check(FileArgs),
    Sample(SampleArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct FileArgs {
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub l: usize,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Comma-separated Z_1,...,Z_l; a fixed generic choice when omitted.
    #[arg(long = "Z", value_delimiter = ',')]
    #[serde(rename = "Z")]
    pub z: Vec<String>,
    #[arg(long, default_value = "3/2")]
    pub t: String,
    /// Write the point JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BowCmd {
    Check(FileArgs),
    /// Circle-cross data goes forward, cross-circle data goes back.
    Hw(HwArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct HwArgs {
    #[arg(long)]
    pub file: PathBuf,
    /// Write the transformed bow JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MacdonaldCmd {
    Apply(ApplyArgs),
    Commute(CommuteArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize, PartialEq, Eq)]
pub enum MacOp {
    /// The difference operator sum_j prod_(i!=j) (X_i - tX_j)/(X_i - X_j) tau_j.
    #[value(name = "M1")]
    M1,
    /// Its l = 1 cyclotomic version with X_j^(-1)(tau_j - 1).
    #[value(name = "M1-l1")]
    M1L1,
}

#[derive(Args, Debug, Serialize)]
pub struct ApplyArgs {
    #[arg(long, value_enum)]
    pub op: MacOp,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: usize,
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub t: String,
    /// Polynomial JSON: {"N": n, "terms": [{"e": [...], "c": "p/q"}, ...]}.
    #[arg(long)]
    pub poly: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct CommuteArgs {
    #[arg(long)]
    pub r1: usize,
    #[arg(long)]
    pub r2: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: usize,
    #[arg(long)]
    pub maxdeg: usize,
    #[arg(long, default_value = "7/5")]
    pub q: String,
    /// The Hecke parameter with t = tt^2.
    #[arg(long, default_value = "3/2")]
    pub tt: String,
    #[arg(long = "Z", value_delimiter = ',')]
    #[serde(rename = "Z")]
    pub z: Vec<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Smoke,
    PaperAcceptance,
}

#[derive(Args, Debug, Serialize)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub name: SuiteName,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
