//! Command-line surface.
//!
//! Exit codes: 0 = all checks pass, 1 = a theorem-level flag failed,
//! 2 = input error, 3 = budget refusal.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "ale-curves",
    about = "Exact special-parameter counting and minimal-rank-sum decomposition solving for ADE root systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root-system construction and inspection.
    Roots {
        #[command(subcommand)]
        command: RootsCommand,
    },
    /// Count special twistor parameters, from a file or by sampling.
    Count(CountArgs),
    /// Aggregate verification runs.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Probe lower semi-continuity of the special-parameter count.
    Semicont(SemicontArgs),
    /// Minimal rank sum over disjoint decompositions.
    F1(SolveArgs),
    /// Minimal rank sum over overlap-permitting decompositions.
    F2(SolveArgs),
    /// Decomposition induced by a 2-plane.
    Decomp(DecompArgs),
    /// Validate a decomposition witness file.
    Validate(ValidateArgs),
}

#[derive(Subcommand, Debug)]
pub enum RootsCommand {
    /// Build a root system and emit its roots and Cartan matrix.
    Build(SystemArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Check every rank-stratified count bound over sampled parameters.
    Theorem12(CountArgs),
}

#[derive(Args, Debug)]
pub struct SystemArgs {
    /// Family letter (A, D or E); repeatable, paired with --rank.
    #[arg(long, required = true)]
    pub family: Vec<String>,
    /// Rank; repeatable, paired with --family.
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Family letter (A, D or E); repeatable, paired with --rank.
    #[arg(long)]
    pub family: Vec<String>,
    /// Rank; repeatable, paired with --family.
    #[arg(long)]
    pub rank: Vec<usize>,
    /// Parameter-rank stratum to sample: 1, 2, 3 or all.
    #[arg(long, default_value = "all")]
    pub rank_class: String,
    /// Samples per (system, stratum).
    #[arg(long, default_value_t = 10)]
    pub samples: u64,
    /// PRNG seed; fully determines the run.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Single-parameter file; overrides sampling.
    #[arg(long)]
    pub zeta: Option<PathBuf>,
    /// Numerators are sampled from [-N, N].
    #[arg(long, default_value_t = 20)]
    pub numerator_bound: i64,
    /// Denominators are sampled from {1, ..., D}.
    #[arg(long, default_value_t = 8)]
    pub max_denominator: i64,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    pub format: String,
    /// Cache directory; ALE_CURVES_CACHE is honored when absent.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SemicontArgs {
    #[arg(long, required = true)]
    pub family: Vec<String>,
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
    /// Rank stratum of the base points: 1, 2, 3 or all.
    #[arg(long, default_value = "all")]
    pub rank_class: String,
    /// Base points per (system, stratum).
    #[arg(long, default_value_t = 5)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Perturbation radius as an exact rational "p/q".
    #[arg(long, default_value = "1/1000")]
    pub radius: String,
    /// Perturbations per base point.
    #[arg(long, default_value_t = 100)]
    pub perturbations: u64,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, required = true)]
    pub family: Vec<String>,
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
    /// f2 constraint mode: literal or geometric.
    #[arg(long)]
    pub mode: Option<String>,
    /// Opt in to the rank-5/6 exhaustive search.
    #[arg(long, default_value_t = false)]
    pub allow_large: bool,
    /// Branch-and-bound node ceiling override.
    #[arg(long)]
    pub node_ceiling: Option<u64>,
}

#[derive(Args, Debug)]
pub struct DecompArgs {
    #[arg(long, required = true)]
    pub family: Vec<String>,
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
    /// Plane file with a "basis" of two vectors; sampled when absent.
    #[arg(long)]
    pub plane: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long, required = true)]
    pub family: Vec<String>,
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
    /// Decomposition witness file to check.
    #[arg(long, required = true)]
    pub witness: PathBuf,
}
