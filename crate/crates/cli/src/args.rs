use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "surfcover",
    version,
    about = "Surface embeddings, planarization and ball covers"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomised commands; recorded in the report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler genus and orientability of an embedding.
    Genus { input: PathBuf },
    /// Face and vertex norms.
    Norms { input: PathBuf },
    /// Shortest non-separating cycle.
    Nonsep { input: PathBuf },
    /// Planarizing edge set of an embedding.
    Planarize { input: PathBuf },
    /// Planarizing edge set of a drawing with crossings.
    DrawingPlanarize { input: PathBuf },
    /// Crossing statistics of a drawing.
    Crossings { input: PathBuf },
    /// Cover the graph by balls of radius R.
    Ballcover {
        input: PathBuf,
        #[command(flatten)]
        radius: Radius,
        /// Search for a minimum cover instead of the greedy one.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Midpoint witness for pairwise shortest paths between centers.
    Pq {
        input: PathBuf,
        #[command(flatten)]
        radius: Radius,
        #[arg(long, value_delimiter = ',', required = true)]
        centers: Vec<usize>,
    },
    /// VC-dimension of the radius-R ball system.
    Vcdim {
        input: PathBuf,
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Ball cover after removing apex vertices.
    Apexcover {
        input: PathBuf,
        #[command(flatten)]
        radius: Radius,
        #[arg(long, value_delimiter = ',')]
        apices: Vec<usize>,
    },
    /// Central node of a tree decomposition.
    Central {
        input: PathBuf,
        #[arg(long)]
        td: PathBuf,
        #[command(flatten)]
        radius: Radius,
        /// Node the search starts from.
        #[arg(long)]
        start: Option<usize>,
    },
    /// Generate a test instance.
    Gen(Gen),
}

#[derive(Debug, Args)]
pub struct Radius {
    #[arg(long)]
    pub radius: usize,
}

#[derive(Debug, Args)]
pub struct Gen {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Fraction of edges dropped from random planar instances.
    #[arg(long, default_value_t = 0.3)]
    pub drop: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    ToroidalTriangulation,
    GenusGTriangulation,
    Grid,
    RandomPlanar,
}
