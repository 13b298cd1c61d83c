mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pathforge", version, about = "Pathwidth, minors and unavoidable induced subgraphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Input graph (standard input when absent).
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Output file: the graph for `gen`, otherwise the certificate.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::EdgeList)]
    pub format: Format,
    /// Search step budget; unlimited when absent.
    #[arg(long, global = true, env = "PATHFORGE_BUDGET")]
    pub budget: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, conflicts_with_all = ["inclusive", "strictness"])]
    pub strict: bool,
    #[arg(long, global = true, conflicts_with = "strictness")]
    pub inclusive: bool,
    #[arg(long, global = true, value_enum)]
    pub strictness: Option<StrictnessArg>,
    /// Machine-readable report on standard output.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictnessArg {
    Strict,
    Inclusive,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Generate a named graph family.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Pathwidth: exact, tree algorithm, or lower bound from a minor model.
    #[command(subcommand)]
    Width(WidthCmd),
    /// Search for a pattern in the input graph.
    #[command(subcommand)]
    Find(FindCmd),
    /// Shape recognisers, on the whole graph or as an induced subgraph search.
    Recognize {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Option<usize>,
    },
    #[command(subcommand)]
    Model(ModelCmd),
    /// Distance-5 partition of the input graph.
    Partition,
    /// Contract radius-2 balls around a distance-5 set of centres.
    ContractBalls {
        #[arg(long, value_delimiter = ',', conflicts_with = "class")]
        centres: Vec<usize>,
        /// Use this class of the distance-5 partition as centres.
        #[arg(long)]
        class: Option<usize>,
        /// Write the contraction's minor-model certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    #[command(subcommand)]
    Extract(ExtractCmd),
    /// Does excluding these graphs as induced subgraphs bound pathwidth?
    Decide { files: Vec<PathBuf> },
    /// Re-validate a certificate against its referenced graphs.
    Verify {
        certificate: PathBuf,
        /// Graph files to resolve references from (the certificate's directory is also searched).
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    Cbt { k: usize },
    CbtPlus { k: usize },
    Kary { k: usize },
    /// Subdivide the input graph.
    Subdivide {
        #[arg(long, default_value_t = 2)]
        len: usize,
        /// Seeded random lengths in 1..=max-len instead of a uniform length.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Line graph of the input graph.
    Linegraph,
    /// Replace a degree-3 vertex of the input graph by a triangle.
    NetReplace { vertex: usize },
    Wattle {
        k: usize,
        #[arg(long, default_value_t = 1)]
        len: usize,
        #[arg(long, value_delimiter = ',')]
        triangles: Vec<usize>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    Hat {
        k: usize,
        /// Write the subdivided T_{2k} subgraph certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum WidthCmd {
    Exact,
    Tree,
    /// Lower bound from a minor-model certificate of the input graph.
    Lower {
        model: PathBuf,
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FindCmd {
    Induced {
        #[arg(long)]
        pattern: PathBuf,
    },
    Subdivision {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        induced: bool,
    },
    Minor {
        #[arg(long)]
        pattern: PathBuf,
    },
    InducedMinor {
        #[arg(long)]
        pattern: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ModelCmd {
    Validate {
        certificate: PathBuf,
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
    /// Repair a minor model of a sparsifiable graph into an induced model of `keep`.
    Repair {
        certificate: PathBuf,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<usize>,
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExtractCmd {
    CleanFork {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
        #[arg(long = "set-a", value_delimiter = ',')]
        set_a: Vec<usize>,
        #[arg(long = "set-b", value_delimiter = ',')]
        set_b: Vec<usize>,
        #[arg(long = "set-c", value_delimiter = ',')]
        set_c: Vec<usize>,
        #[arg(long = "set-s", value_delimiter = ',')]
        set_s: Vec<usize>,
    },
    Wattle {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
    MonoCbt {
        #[arg(long)]
        height: usize,
        #[arg(long)]
        k: usize,
        /// Red vertices; the rest are blue.
        #[arg(long, value_delimiter = ',', conflicts_with = "random")]
        red: Vec<usize>,
        /// Seeded uniform random colouring.
        #[arg(long)]
        random: bool,
    },
    ToSubgraph {
        #[arg(long)]
        wattle: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
    },
    PipelineDeg {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        stage_width: Option<usize>,
    },
    PipelineMinorfree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => ExitCode::from(commands::run(cli)),
        Err(e) => {
            let _ = e.print();
            // Usage errors share the input-error status; 2 means an exhausted budget.
            ExitCode::from(if e.use_stderr() { 3 } else { 0 })
        }
    }
}
