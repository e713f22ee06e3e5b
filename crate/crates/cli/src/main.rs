mod commands;
mod input;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

/// Permutable and 2-transitive matchings in symmetric graphs.
#[derive(Parser, Debug)]
#[command(name = "permatch", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from a named family and print its graph6.
    Gen {
        /// petersen, complete, empty, cycle, path, complete-bipartite, odd,
        /// hypercube, folded-hypercube, paley, paley-cliques, join,
        /// matching-join, composition, complement.
        family: String,
        /// Family parameters: integers, or graphs such as K3, K3bar, C5, P4,
        /// Petersen or a graph6 file.
        params: Vec<String>,
        /// Write the graph6 string to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Automorphism group and canonical form of a graph6 file.
    Aut { graph: PathBuf },
    /// Matching analysis and search.
    Matching {
        #[command(subcommand)]
        action: MatchingCommand,
    },
    /// Derived regular cover from the standard voltage assignment.
    Cover {
        graph: PathBuf,
        #[arg(short, long)]
        p: usize,
        /// Edges the spanning tree must contain; their lift is analysed.
        #[arg(long)]
        tree_contains: Option<String>,
        /// Also lift the matching defined by a near-polygonal cycle system at vertex 0.
        #[arg(long)]
        cycle_lift: bool,
        /// `auto` or a generator file.
        #[arg(long)]
        group: Option<String>,
        /// Largest cover accepted.
        #[arg(long, default_value_t = permatch::voltage::DEFAULT_COVER_CAP)]
        cap: usize,
        /// Write the cover's graph6 here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the fiber map (cover vertex -> [base vertex, voltage]) here.
        #[arg(long)]
        fibers: Option<PathBuf>,
        /// Write the voltage assignment JSON here.
        #[arg(long)]
        voltages: Option<PathBuf>,
    },
    /// Search for a group-invariant near-polygonal cycle system.
    NearPolygonal {
        graph: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
    /// Quotient by a partition given as a JSON list of blocks.
    Quotient {
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        /// Check invariance under `auto` or a generator file.
        #[arg(long)]
        group: Option<String>,
    },
    /// Compare the exhaustive classification (m = 2, 3) with the catalog,
    /// or check catalog membership with --membership.
    Classify {
        #[arg(short, long)]
        m: usize,
        #[arg(long, default_value = "two-transitive")]
        mode: String,
        #[arg(long)]
        membership: bool,
    },
}

#[derive(Subcommand, Debug)]
enum MatchingCommand {
    /// Report the symmetry of a given matching.
    Analyze {
        graph: PathBuf,
        /// Matching as `u-v,u-v,...`.
        #[arg(long)]
        edges: String,
        #[arg(long)]
        group: Option<String>,
        /// Exit 1 unless the matching is `permutable` or `two-transitive`.
        #[arg(long)]
        check: Option<String>,
    },
    /// Find an m-matching with the required symmetry.
    Find {
        graph: PathBuf,
        #[arg(short, long)]
        m: usize,
        #[arg(long, default_value = "permutable")]
        mode: String,
        #[arg(long)]
        group: Option<String>,
    },
}

/// Invalid input; exits with status 2.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<permatch::Error> for CliError {
    fn from(e: permatch::Error) -> Self {
        CliError(e.to_string())
    }
}

/// A command's payload and whether the queried property holds.
pub struct Outcome {
    pub result: Value,
    pub holds: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs) = describe(&cli.command);
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = json!({
        "command": name,
        "inputs": inputs,
        "result": outcome.result,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn describe(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Gen { family, params, out } => {
            ("gen", json!({"family": family, "params": params, "out": out}))
        }
        Command::Aut { graph } => ("aut", json!({"graph": graph})),
        Command::Matching { action } => match action {
            MatchingCommand::Analyze { graph, edges, group, check } => (
                "matching analyze",
                json!({"graph": graph, "edges": edges, "group": group, "check": check}),
            ),
            MatchingCommand::Find { graph, m, mode, group } => (
                "matching find",
                json!({"graph": graph, "m": m, "mode": mode, "group": group}),
            ),
        },
        Command::Cover { graph, p, tree_contains, cycle_lift, group, cap, out, fibers, voltages } => (
            "cover",
            json!({
                "graph": graph, "p": p, "tree_contains": tree_contains, "cycle_lift": cycle_lift,
                "group": group, "cap": cap, "out": out, "fibers": fibers, "voltages": voltages,
            }),
        ),
        Command::NearPolygonal { graph, group } => {
            ("near-polygonal", json!({"graph": graph, "group": group}))
        }
        Command::Quotient { graph, partition, group } => (
            "quotient",
            json!({"graph": graph, "partition": partition, "group": group}),
        ),
        Command::Classify { m, mode, membership } => {
            ("classify", json!({"m": m, "mode": mode, "membership": membership}))
        }
    }
}
