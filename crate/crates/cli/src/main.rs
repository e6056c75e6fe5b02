use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use foon_core::Algorithm;

mod commands;

/// Exit codes: 0 success, 1 no task tree found, 2 usage or parse error,
/// 3 verification failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    NotFound = 1,
    Usage = 2,
    Invalid = 3,
}

#[derive(Parser)]
#[command(name = "foon", version, about = "Merge FOON subgraphs and retrieve task trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Merge subgraph files into one universal graph, dropping duplicate units.
    Merge {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Retrieve a task tree for one goal.
    Search {
        graph: PathBuf,
        /// `name`, `name{state,...}` or `name{state,...}[ingredient,...]`.
        #[arg(short, long)]
        goal: String,
        #[arg(short, long)]
        kitchen: PathBuf,
        #[arg(short, long = "algo", default_value = "ids")]
        algo: Algorithm,
        /// IDS depth bound; defaults to the number of units in the graph.
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Tabulate task-tree sizes for every goal under all three algorithms.
    Compare {
        graph: PathBuf,
        #[arg(short, long)]
        kitchen: PathBuf,
        /// One goal per line.
        #[arg(long)]
        goals: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Render the graph in Graphviz DOT.
    ExportDot {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print size and degree statistics.
    Stats { graph: PathBuf },
    /// Check that a task tree file is executable from the kitchen and reaches the goal.
    Verify {
        graph: PathBuf,
        tree: PathBuf,
        #[arg(short, long)]
        kitchen: PathBuf,
        #[arg(short, long)]
        goal: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Merge { inputs, output } => commands::merge(&inputs, output.as_deref()),
        Command::Search {
            graph,
            goal,
            kitchen,
            algo,
            max_depth,
            output,
        } => commands::search(&graph, &goal, &kitchen, algo, max_depth, output.as_deref()),
        Command::Compare {
            graph,
            kitchen,
            goals,
            csv,
        } => commands::compare(&graph, &kitchen, &goals, csv.as_deref()),
        Command::ExportDot { graph, output } => commands::export_dot(&graph, output.as_deref()),
        Command::Stats { graph } => commands::stats(&graph),
        Command::Verify {
            graph,
            tree,
            kitchen,
            goal,
        } => commands::verify(&graph, &tree, &kitchen, &goal),
    };
    let status = result.unwrap_or_else(|err| {
        eprintln!("error: {err:#}");
        Status::Usage
    });
    ExitCode::from(status as u8)
}
