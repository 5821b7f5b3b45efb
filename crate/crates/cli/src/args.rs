use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxgenus::generators::{FamilySpec, HalinSpec};
use maxgenus::{OracleBudget, TreeStrategy};

#[derive(Parser, Debug)]
#[command(name = "maxgenus", version, about = "Maximum genus of multigraphs from edge-list files")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Print per-stage progress to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the maximum genus of each input graph.
    Compute {
        /// Edge-list files; `-` reads stdin.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        tree: TreeArgs,
    },
    /// Compare the matching pipeline against spanning-tree enumeration.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Directory for counterexample bundles written on a mismatch.
        #[arg(long, default_value = ".")]
        bundle_dir: PathBuf,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Write the intersection graph of the fundamental cycles as an edge list.
    GmDump {
        file: PathBuf,
        #[command(flatten)]
        tree: TreeArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TreeKind {
    Dfs,
    Random,
}

#[derive(Args, Debug)]
pub struct TreeArgs {
    /// Spanning tree construction.
    #[arg(long, value_enum, default_value_t = TreeKind::Dfs)]
    pub tree: TreeKind,
    /// Seed for `--tree random`.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl TreeArgs {
    pub fn strategy(&self) -> Result<TreeStrategy, String> {
        match (self.tree, self.seed) {
            (TreeKind::Dfs, _) => Ok(TreeStrategy::Dfs),
            (TreeKind::Random, Some(seed)) => Ok(TreeStrategy::Random { seed }),
            (TreeKind::Random, None) => Err("--tree random requires --seed".into()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.tree {
            TreeKind::Dfs => "dfs",
            TreeKind::Random => "random",
        }
    }
}

#[derive(Args, Debug)]
pub struct BudgetArgs {
    /// Largest spanning-tree count the oracle will enumerate.
    #[arg(long)]
    pub budget_trees: Option<u64>,
    #[arg(long)]
    pub budget_vertices: Option<usize>,
    #[arg(long)]
    pub budget_edges: Option<usize>,
}

impl BudgetArgs {
    pub fn budget(&self) -> OracleBudget {
        let mut b = OracleBudget::default();
        if let Some(t) = self.budget_trees {
            b.max_trees = t;
        }
        if let Some(v) = self.budget_vertices {
            b.max_vertices = v;
        }
        if let Some(e) = self.budget_edges {
            b.max_edges = e;
        }
        b
    }
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// n-dimensional hypercube Q_n.
    Hypercube { dim: usize },
    /// Generalized Petersen graph P(n, k).
    GenPetersen { n: usize, k: usize },
    /// Two triangles joined by a bridge.
    Dumbbell,
    /// One vertex with `loops` loops.
    Bouquet { loops: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    /// Hub joined to every vertex of a rim cycle.
    Wheel { spokes: usize },
    /// Random spanning tree plus uniform extra edges.
    RandomConnected {
        n: usize,
        m: usize,
        /// Allow loops among the extra edges.
        #[arg(long)]
        loops: bool,
        #[arg(long)]
        seed: u64,
    },
    /// Random simple connected base graph times a path of `len` edges.
    CartesianPath {
        base_vertices: usize,
        base_edges: usize,
        len: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Two Halin graphs joined by `k` edges. Sides are `wheel:N` or `tree:N`.
    HalinComposition {
        #[arg(value_parser = parse_halin)]
        first: HalinSpec,
        #[arg(value_parser = parse_halin)]
        second: HalinSpec,
        k: usize,
        #[arg(long)]
        seed: u64,
    },
}

impl Family {
    pub fn spec(&self) -> FamilySpec {
        match *self {
            Family::Hypercube { dim } => FamilySpec::Hypercube { dim },
            Family::GenPetersen { n, k } => FamilySpec::GenPetersen { n, k },
            Family::Dumbbell => FamilySpec::Dumbbell,
            Family::Bouquet { loops } => FamilySpec::Bouquet { loops },
            Family::Complete { n } => FamilySpec::Complete { n },
            Family::CompleteBipartite { a, b } => FamilySpec::CompleteBipartite { a, b },
            Family::Cycle { n } => FamilySpec::Cycle { n },
            Family::Path { n } => FamilySpec::Path { n },
            Family::Wheel { spokes } => FamilySpec::Wheel { spokes },
            Family::RandomConnected { n, m, loops, seed } => FamilySpec::RandomConnected { n, m, loops, seed },
            Family::CartesianPath { base_vertices, base_edges, len, seed } => {
                FamilySpec::CartesianPath { base_vertices, base_edges, len, seed }
            }
            Family::HalinComposition { first, second, k, seed } => {
                FamilySpec::HalinComposition { first, second, k, seed }
            }
        }
    }
}

fn parse_halin(s: &str) -> Result<HalinSpec, String> {
    let (kind, size) = s.split_once(':').ok_or_else(|| format!("expected wheel:N or tree:N, got {s:?}"))?;
    let size: usize = size.parse().map_err(|e| format!("bad size in {s:?}: {e}"))?;
    match kind {
        "wheel" => Ok(HalinSpec::Wheel(size)),
        "tree" => Ok(HalinSpec::RandomTree(size)),
        _ => Err(format!("unknown Halin side {kind:?}, expected wheel or tree")),
    }
}
