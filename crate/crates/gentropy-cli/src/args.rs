//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "gentropy",
    about = "Entropy functions induced by finite groups: exact computation, \
             inequality suites, extensions, and polyhedral outer bounds",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<std::path::PathBuf>,

    /// Seed for every randomized step; fixed seed means byte-identical output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Intermediate-row cap for Fourier-Motzkin elimination.
    #[arg(long, global = true, default_value_t = gentropy::cone::DEFAULT_ROW_CAP)]
    pub fm_cap: usize,

    /// Worker threads for sweeps (default: GENTROPY_PARALLELISM or 1).
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
}

impl Cli {
    pub fn parallelism(&self) -> usize {
        self.parallel
            .or_else(|| {
                std::env::var("GENTROPY_PARALLELISM").ok().and_then(|v| v.parse().ok())
            })
            .unwrap_or(1)
            .max(1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct groups and enumerate their subgroups.
    Group(GroupCmd),
    /// Compute the exact entropy vector of a characterization.
    Entropy(EntropyCmd),
    /// Linear characterizations over prime fields.
    Linear(LinearCmd),
    /// Evaluate an inequality suite on a stored vector.
    Check(CheckCmd),
    /// Evaluate a suite over all (or sampled) subgroup tuples of a group.
    Sweep(SweepCmd),
    /// Build extension constraint sets and adhesive witnesses.
    Extend(ExtendCmd),
    /// Operate on polyhedral cones in H-representation.
    Cone(ConeCmd),
    /// Outer-bound by extension, intersection, and projection.
    Bound(BoundCmd),
}

#[derive(Args)]
pub struct GroupCmd {
    #[command(subcommand)]
    pub action: GroupAction,
}

#[derive(Subcommand)]
pub enum GroupAction {
    /// Generate a group and print it in the group file format.
    Gen {
        /// cyclic:N, dihedral:N, symmetric:N, elementary-abelian:P:K,
        /// products joined with '*', or @file.json.
        #[arg(long)]
        group: String,
    },
    /// List every subgroup as a sorted element-index array.
    Subgroups {
        #[arg(long)]
        group: String,
    },
}

#[derive(Args)]
pub struct EntropyCmd {
    /// Group spec (same syntax as `group gen`).
    #[arg(long)]
    pub group: String,

    /// Subgroup, one flag per variable: a generator list "2,4", an explicit
    /// element list "elems:0,2,4", or "" for the trivial subgroup.
    #[arg(long = "subgroup", required = true)]
    pub subgroups: Vec<String>,

    /// Cross-check against the Shannon entropy of the induced distribution
    /// and report the maximum deviation in bits.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args)]
pub struct LinearCmd {
    #[command(subcommand)]
    pub action: LinearAction,
}

#[derive(Args)]
pub struct LinearInput {
    /// Field characteristic (prime ≤ 17).
    #[arg(long)]
    pub p: u64,

    /// Ambient dimension.
    #[arg(long)]
    pub m: usize,

    /// Subspace, one flag per variable: basis rows "1,0,0;0,1,1"
    /// (";"-separated rows), "zero", or "full".
    #[arg(long = "subspace", required = true)]
    pub subspaces: Vec<String>,
}

#[derive(Subcommand)]
pub enum LinearAction {
    /// Entropy vector via subspace intersections.
    Entropy(LinearInput),
    /// Entropy vector via the dual rank function (orthogonal complements).
    Dual(LinearInput),
    /// Append the Slepian-Wolf extension subspace.
    SwExtend {
        #[command(flatten)]
        input: LinearInput,
        /// Source block, e.g. "1" or "13".
        #[arg(long)]
        alpha: String,
        /// Side-information block.
        #[arg(long)]
        beta: String,
    },
}

#[derive(Args)]
pub struct CheckCmd {
    /// Entropy vector file (exact "indices" or real "values_bits" JSON).
    #[arg(long)]
    pub vector: std::path::PathBuf,

    /// shannon | ingleton | zy | @functionals.json (array or single).
    #[arg(long)]
    pub suite: String,
}

#[derive(Args)]
pub struct SweepCmd {
    #[arg(long)]
    pub group: String,

    /// Number of variables (tuple length).
    #[arg(long)]
    pub n: usize,

    /// shannon | ingleton | zy | @functionals.json.
    #[arg(long)]
    pub suite: String,

    /// Sample this many seeded random tuples instead of exhausting.
    #[arg(long)]
    pub random: Option<u64>,

    /// Refuse exhaustive sweeps beyond this many tuples.
    #[arg(long, default_value_t = 10_000_000)]
    pub max_tuples: u64,
}

#[derive(Args)]
pub struct ExtendCmd {
    #[command(subcommand)]
    pub action: ExtendAction,
}

#[derive(Subcommand)]
pub enum ExtendAction {
    /// Mirror-copy constraints glued on a subset.
    Adhesive {
        #[arg(long)]
        n: usize,
        /// Glued subset, e.g. "1" or "12".
        #[arg(long)]
        alpha: String,
        /// Also build and verify the group witness for this characterization.
        #[arg(long)]
        group: Option<String>,
        #[arg(long = "subgroup")]
        subgroups: Vec<String>,
    },
    /// Common-information join constraints.
    Join {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Slepian-Wolf constraints.
    Sw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Markov-chain double extension constraints.
    Markov {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        /// Source vector file; gates on the Markov equality when given.
        #[arg(long)]
        source: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
pub struct ConeCmd {
    #[command(subcommand)]
    pub action: ConeAction,
}

#[derive(Subcommand)]
pub enum ConeAction {
    /// Project a cone onto a subset of its coordinates.
    Project {
        /// Cone file (JSON or text form).
        #[arg(long)]
        cone: std::path::PathBuf,
        /// Comma-separated labels to keep, e.g. "1,2,12".
        #[arg(long)]
        keep: String,
        /// Remove rows proven redundant by exact feasibility.
        #[arg(long)]
        full_reduce: bool,
    },
    /// Exact membership of a stored vector; exit 1 if outside.
    Member {
        #[arg(long)]
        cone: std::path::PathBuf,
        #[arg(long)]
        vector: std::path::PathBuf,
    },
    /// Intersect two cones over the same coordinates.
    Intersect {
        #[arg(long = "cone", num_args = 1, required = true)]
        cones: Vec<std::path::PathBuf>,
    },
}

#[derive(Args)]
pub struct BoundCmd {
    /// kind:n:alpha[:beta[:gamma]] (e.g. join:2:1:2) or @spec.json.
    #[arg(long)]
    pub extension: String,

    /// gamma:M for the polymatroid cone, full:M, or @cone-file.
    #[arg(long)]
    pub outer: String,

    /// Source vector file for the markov gate.
    #[arg(long)]
    pub source: Option<std::path::PathBuf>,

    /// Labels to project onto (default: the extension's source coordinates).
    #[arg(long)]
    pub keep: Option<String>,

    /// Check every vector in this JSON array for membership; exit 1 on any
    /// non-member.
    #[arg(long)]
    pub verify_members: Option<std::path::PathBuf>,
}
