//! Command-line interface definition.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Exact-arithmetic invariants of symmetric products of curves.
#[derive(Debug, Parser)]
#[command(name = "symprod", version, about, max_term_width = 100)]
pub struct Cli {
    /// Render human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus of a curve model.
    Genus(CurveArg),
    /// Riemann-Roch dimensions of a divisor through the jet matrix.
    H0(CurveDivisorArgs),
    /// Base-point test for a divisor against the canonical system.
    BasePoint(CurveDivisorArgs),
    /// Flag every degree-d divisor on rational points as base / non-base.
    Survey(SurveyArgs),
    /// Canonical class, K^2, canonical section count, and related classes.
    Classes(ClassesArgs),
    /// Intersection numbers of numerical classes.
    Intersect(IntersectArgs),
    /// Self-intersection of the conjugate-pair curve and its definiteness.
    Gamma2(GenusOnlyArgs),
    /// Gonality bounds of a model, optionally computationally witnessed.
    Gonality(GonalityArgs),
    /// Decide existence of a semi-orthogonal decomposition for (g, d).
    Verdict(VerdictArgs),
    /// Dimension of the space of canonical sections of the symmetric product.
    Macdonald(GdArgs),
}

#[derive(Debug, Args)]
pub struct CurveArg {
    /// Path to a curve specification JSON file.
    #[arg(long)]
    pub curve: PathBuf,
}

#[derive(Debug, Args)]
pub struct CurveDivisorArgs {
    /// Path to a curve specification JSON file.
    #[arg(long)]
    pub curve: PathBuf,
    /// Path to a divisor JSON file.
    #[arg(long)]
    pub divisor: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurveyModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Path to a curve specification JSON file (prime-field model).
    #[arg(long)]
    pub curve: PathBuf,
    /// Divisor degree to survey, 1 <= d <= g - 1.
    #[arg(long)]
    pub d: u32,
    /// Exhaustive enumeration or seeded sampling.
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: SurveyModeArg,
    /// Number of draws in sampled mode.
    #[arg(long, requires = "seed")]
    pub count: Option<u64>,
    /// Seed for sampled mode; required there so output stays reproducible.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Refuse exhaustive runs needing more divisors than this.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_divisors: u64,
    /// Evaluate divisor reports on this many threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Emit only the summary, not per-divisor records.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub d: u32,
    /// Include the conjugate-pair curve self-intersection.
    #[arg(long)]
    pub hyperelliptic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntersectSpace {
    /// Classes a x + b theta on the second symmetric product.
    C2,
    /// Classes a1 f1 + a2 f2 + c delta on the Cartesian square.
    Product,
}

#[derive(Debug, Args)]
pub struct IntersectArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long, value_enum, default_value = "c2")]
    pub space: IntersectSpace,
    /// First class: "a,b" on the symmetric product, "a1,a2,c" on the square.
    #[arg(long)]
    pub u: String,
    /// Second class, same format.
    #[arg(long)]
    pub v: String,
}

#[derive(Debug, Args)]
pub struct GenusOnlyArgs {
    #[arg(long)]
    pub g: u32,
}

#[derive(Debug, Args)]
pub struct GdArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub d: u32,
}

#[derive(Debug, Args)]
pub struct GonalityArgs {
    /// Path to a curve specification JSON file.
    #[arg(long)]
    pub curve: PathBuf,
    /// Witness the plane gonality formula computationally (prime fields).
    #[arg(long)]
    pub witness: bool,
    /// Enumeration budget for the witness searches.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_divisors: u64,
}

#[derive(Debug, Args)]
pub struct VerdictArgs {
    /// Genus; taken from --curve when one is given.
    #[arg(long, required_unless_present = "curve", conflicts_with = "curve")]
    pub g: Option<u32>,
    #[arg(long)]
    pub d: u32,
    /// Assert the hyperelliptic flag without a curve file.
    #[arg(long, conflicts_with = "curve")]
    pub hyperelliptic: bool,
    /// Curve file; supplies genus, the hyperelliptic flag, and gonality.
    #[arg(long)]
    pub curve: Option<PathBuf>,
    /// Witness a plane model's gonality before deciding (prime fields).
    #[arg(long, requires = "curve")]
    pub witness: bool,
    /// User-asserted exact gonality.
    #[arg(long, conflicts_with_all = ["gon_lower", "curve"])]
    pub gon_exact: Option<u32>,
    /// User-asserted gonality lower bound.
    #[arg(long, conflicts_with = "curve")]
    pub gon_lower: Option<u32>,
    /// Enumeration budget for the witness searches.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_divisors: u64,
}
