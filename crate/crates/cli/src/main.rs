use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modex::report::RunReport;

mod commands;
mod plot;

#[derive(Parser, Debug)]
#[command(name = "modex", version, about = "Model-expansion solvers for path, stemma, supergraph and automaton problems")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON run report here.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the CSV run report here.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Worker threads for batch commands.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    /// Solver seed.
    #[arg(long, global = true, env = "MODEX_SEED")]
    pub seed: Option<u64>,
    /// Report every time as zero so that reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shortest path between the designated nodes of an edge-list graph.
    ShortestPath {
        graph: PathBuf,
        /// Encoding: 1 join, 2 linear, 3 unary, 4 relaxed.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=4))]
        variant: u8,
        #[arg(long, value_name = "SECONDS")]
        time_budget: Option<f64>,
    },
    /// Consistency of variant readings with a stemma.
    #[command(subcommand)]
    Stemma(StemmaCommand),
    /// Minimum common supergraph of partially labeled graphs.
    Mcs {
        method: McsMethod,
        instance: PathBuf,
        #[arg(long, value_name = "SECONDS")]
        time_budget: Option<f64>,
    },
    /// Minimal DFA identification.
    #[command(subcommand)]
    Dfa(DfaCommand),
    /// Encoding size and timing benchmarks.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Subcommand, Debug)]
enum StemmaCommand {
    /// Check every feature for a single source per reading.
    Check { stemma: PathBuf, features: PathBuf },
    /// Fewest sources needed to explain each feature.
    MinSources { stemma: PathBuf, features: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum McsMethod {
    Exact,
    Greedy,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum ObjectiveArg {
    States,
    Transitions,
}

#[derive(Subcommand, Debug)]
enum DfaCommand {
    Learn {
        sample: PathBuf,
        /// Add the redundant transition clauses.
        #[arg(long)]
        redundant: bool,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::States)]
        objective: ObjectiveArg,
        /// Write the automaton in dot format (stdout without a path).
        #[arg(long, value_name = "PATH", num_args = 0..=1)]
        emit_dot: Option<Option<PathBuf>>,
        #[arg(long, value_name = "SECONDS")]
        time_budget: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum BenchCommand {
    /// Encode and solve random graphs of growing size with every variant.
    ShortestPath {
        /// Node counts, ascending.
        #[arg(long, value_delimiter = ',', default_values_t = [8, 12, 16, 20, 24])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.2)]
        density: f64,
        /// SVG chart of clause counts and solve times.
        #[arg(long, value_name = "PATH")]
        plot: Option<PathBuf>,
    },
}

/// A report and whether a solution was found; `false` exits with 1.
pub type Outcome = anyhow::Result<(RunReport, bool)>;

pub fn read_input(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

/// `file:line: message`, or `file: message` when no line applies.
pub fn at(path: &Path, e: modex::ParseError) -> anyhow::Error {
    if e.line == 0 {
        anyhow::anyhow!("{}: {}", path.display(), e.message)
    } else {
        anyhow::anyhow!("{}:{}: {}", path.display(), e.line, e.message)
    }
}

fn write_reports(common: &Common, report: &RunReport) -> anyhow::Result<()> {
    if let Some(p) = &common.json {
        std::fs::write(p, report.to_json()).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
    }
    if let Some(p) = &common.csv {
        std::fs::write(p, report.to_csv()).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Outcome {
    let c = &cli.common;
    match cli.command {
        Command::ShortestPath {
            graph,
            variant,
            time_budget,
        } => commands::shortest_path(c, &graph, variant, time_budget),
        Command::Stemma(StemmaCommand::Check { stemma, features }) => commands::stemma(c, &stemma, &features, false),
        Command::Stemma(StemmaCommand::MinSources { stemma, features }) => {
            commands::stemma(c, &stemma, &features, true)
        }
        Command::Mcs {
            method,
            instance,
            time_budget,
        } => commands::mcs(c, &instance, matches!(method, McsMethod::Greedy), time_budget),
        Command::Dfa(DfaCommand::Learn {
            sample,
            redundant,
            objective,
            emit_dot,
            time_budget,
        }) => commands::dfa_learn(c, &sample, redundant, objective, emit_dot, time_budget),
        Command::Bench(BenchCommand::ShortestPath { sizes, density, plot }) => {
            commands::bench_shortest_path(c, &sizes, density, plot.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common.clone();
    let result = dispatch(cli).and_then(|(report, found)| write_reports(&common, &report).map(|_| found));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("modex: {e:#}");
            ExitCode::from(2)
        }
    }
}
