//! `homtest`: chromatic lower bounds from mod-2 homology of Hom complexes.

mod commands;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homtest::graph::{parse_dimacs, parse_edge_list, registry_names, test_graph_by_name, Graph, TestGraph};
use homtest::homcomplex::DEFAULT_CELL_CAP;

#[derive(Parser)]
#[command(name = "homtest", version, about = "Chromatic lower bounds from mod-2 homology of Hom complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound on the chromatic number from each test graph.
    Bound(BoundArgs),
    /// f-vector and Betti numbers of Hom(T, G) for each test graph.
    Betti(BettiArgs),
    /// Cell counts of Hom(T, G), optionally exporting the cells.
    HomStats(HomStatsArgs),
    /// Exact chromatic number by branch and bound.
    ChiExact(ChiArgs),
    /// Fold-reduce the graph and print the result.
    Fold(FoldArgs),
    /// Run the built-in battery of known cases.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

#[derive(Args)]
pub struct GraphInput {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

#[derive(Args)]
pub struct TestSelection {
    /// Comma-separated test graph names.
    #[arg(long, value_delimiter = ',', default_value = "k2,k3,c5")]
    pub tests: Vec<String>,
    /// Maximum number of cells to build per complex.
    #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
    pub cell_cap: usize,
}

#[derive(Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub select: TestSelection,
    /// Check reduced homology through this dimension.
    #[arg(long, default_value_t = homtest::bound::DEFAULT_MAX_CHECK_DIM)]
    pub max_dim: usize,
    /// Skip fold reduction before building the complexes.
    #[arg(long)]
    pub no_fold: bool,
    /// Also compute the exact chromatic number.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub select: TestSelection,
    /// Report Betti numbers through this dimension only (builds one
    /// dimension higher). Without it the whole complex is built.
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Unreduced instead of reduced Betti numbers.
    #[arg(long)]
    pub unreduced: bool,
    /// Apply fold reduction first.
    #[arg(long)]
    pub fold: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct HomStatsArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub select: TestSelection,
    /// Build cells through this dimension only.
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Write the cells (`dim; mask,..` per line) to this file; needs a single test.
    #[arg(long)]
    pub export: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = homtest::graph::DEFAULT_EXACT_LIMIT)]
    pub limit: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct FoldArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct SelftestArgs {
    /// JSON case list to run instead of the bundled one.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// A failure mapped to the process exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: unreadable file, parse error, unknown name (exit 2).
    Input(String),
    /// A cell, matrix or size limit was hit (exit 3).
    Resource(String),
    /// A check that should always hold did not (exit 4).
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<homtest::Error> for Failure {
    fn from(e: homtest::Error) -> Self {
        use homtest::Error::*;
        match e {
            Parse { .. } | InvalidArgument(_) => Failure::Input(e.to_string()),
            CapExceeded { .. } | MatrixTooLarge { .. } | TooLarge { .. } => Failure::Resource(e.to_string()),
            Truncated { .. } | NotFree { .. } | Invariant(_) => Failure::Internal(e.to_string()),
        }
    }
}

pub type CmdResult = Result<(), Failure>;

pub fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("reading {input}: {e}")))
    }
}

pub fn read_graph(args: &GraphInput) -> Result<Graph, Failure> {
    let text = read_text(&args.input)?;
    let g = match args.format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Dimacs => parse_dimacs(&text),
    };
    g.map_err(|e| Failure::Input(format!("{}: {e}", args.input)))
}

pub fn resolve_tests(names: &[String]) -> Result<Vec<TestGraph>, Failure> {
    if names.is_empty() {
        return Err(Failure::Input("no test graphs given".into()));
    }
    names
        .iter()
        .map(|name| {
            test_graph_by_name(name.trim()).ok_or_else(|| {
                Failure::Input(format!(
                    "unknown test graph {name:?}; available: {}",
                    registry_names().join(", ")
                ))
            })
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bound(a) => commands::bound(a),
        Command::Betti(a) => commands::betti(a),
        Command::HomStats(a) => commands::hom_stats(a),
        Command::ChiExact(a) => commands::chi_exact(a),
        Command::Fold(a) => commands::fold(a),
        Command::Selftest(a) => commands::selftest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("homtest: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
