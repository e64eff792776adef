//! `ncpath` — command-line front end for the workspace.
//!
//! The analysis verbs (`recognize`, `model`, `claw`, `mds`, `mids`, `mcds`,
//! `steiner`, `hamcycle`, `hampath`, `minleaf`) read graphs from files or
//! stdin (`-`) and print one JSON report per input on stdout; diagnostics go
//! to stderr. `gen` emits a seeded instance as an edge list, `verify`
//! re-checks a certificate against its graph, and `bench` times the core
//! operations over a size ladder and prints CSV.
//!
//! Exit codes: 0 for success, 1 for a negative verdict or domain rejection
//! (non-member, disconnected), 2 for usage or input format errors, and 3
//! when a certificate fails verification.

mod bench;
mod run;

use clap::{Parser, Subcommand, ValueEnum};
use ncpath_core::recognition::TargetClass;
use ncpath_testkit::generate::{gen, GenKind, GenParams, GenSpec};
use run::Verb;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ncpath", version, about = "Recognition, domination, and traversal for claw-free chordal graphs", long_about = None)]
struct Cli {
    /// Worker threads when analyzing several input files. Output order
    /// still matches input order.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify each graph and print its certificate.
    Recognize {
        /// Class to test membership in.
        #[arg(long, value_enum, default_value_t = ClassArg::NcPathTree)]
        class: ClassArg,
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Print the host-tree model of each member graph.
    Model {
        /// Render the model as Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Search each chordal graph for an induced claw.
    Claw {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Minimum dominating set of each member graph.
    Mds {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Minimum independent dominating set of each member graph.
    Mids {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Minimum connected dominating set of each member graph.
    Mcds {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Minimum Steiner tree spanning the given terminals.
    Steiner {
        /// Comma-separated terminal vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Hamiltonian cycle search on each member graph.
    Hamcycle {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Hamiltonian path search on each member graph.
    Hampath {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Minimum-leaf spanning tree of each member graph.
    Minleaf {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<String>,
    },
    /// Generate a reproducible instance and print it as an edge list.
    Gen {
        /// Instance family to sample.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// RNG seed; falls back to $NCPATH_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Widest host-tree node (host-tree kind only).
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Longest corridor in host-tree nodes (host-tree kind only).
        #[arg(long, default_value_t = 5)]
        max_piece_len: usize,
        /// Largest twin class per model position (host-tree kind only).
        #[arg(long, default_value_t = 3)]
        twin_multiplicity: usize,
    },
    /// Re-check a stored certificate against its graph.
    Verify {
        /// Graph file, or `-` for stdin.
        #[arg(value_name = "GRAPH")]
        graph: String,
        /// Certificate JSON file, or `-` for stdin.
        #[arg(value_name = "CERTIFICATE")]
        certificate: String,
    },
    /// Time the core operations over generated instances; prints CSV.
    Bench {
        /// Comma-separated instance sizes, ascending.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// Instance family to time against.
        #[arg(long, value_enum, default_value_t = KindArg::RandomProperInterval)]
        kind: KindArg,
        /// RNG seed; falls back to $NCPATH_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated operations to time.
        #[arg(long, value_enum, value_delimiter = ',')]
        ops: Option<Vec<OpArg>>,
    },
}

/// Command-line spelling of the four target classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Chordal,
    NcPathTree,
    NcPathRtree,
    ProperInterval,
}

impl From<ClassArg> for TargetClass {
    fn from(arg: ClassArg) -> TargetClass {
        match arg {
            ClassArg::Chordal => TargetClass::Chordal,
            ClassArg::NcPathTree => TargetClass::NcPathTree,
            ClassArg::NcPathRtree => TargetClass::NcPathRtree,
            ClassArg::ProperInterval => TargetClass::ProperInterval,
        }
    }
}

/// Command-line spelling of the generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    RandomHostTreeNcPaths,
    RandomProperInterval,
    RandomChordal,
    ExhaustiveSmall,
}

impl From<KindArg> for GenKind {
    fn from(arg: KindArg) -> GenKind {
        match arg {
            KindArg::RandomHostTreeNcPaths => GenKind::RandomHostTreeNcPaths,
            KindArg::RandomProperInterval => GenKind::RandomProperInterval,
            KindArg::RandomChordal => GenKind::RandomChordal,
            KindArg::ExhaustiveSmall => GenKind::ExhaustiveSmall,
        }
    }
}

/// Operations the benchmark can time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Recognize,
    Mds,
    Mids,
    Mcds,
    Hamcycle,
    Hampath,
    Minleaf,
}

/// A `--seed` flag wins; otherwise $NCPATH_SEED, otherwise 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("NCPATH_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("NCPATH_SEED is not an unsigned integer: {text:?}")),
        Err(_) => Ok(0),
    }
}

fn generate(spec: &GenSpec) -> u8 {
    match gen(spec) {
        Ok(g) => {
            let header = serde_json::to_string(spec).expect("a spec serializes");
            print!("{}", g.to_edge_list_string(Some(&header)));
            0
        }
        Err(e) => {
            eprintln!("gen: {e}");
            2
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let code = match cli.command {
        Command::Recognize { class, files } => {
            run::analyze(&Verb::Recognize(class.into()), &files, jobs)
        }
        Command::Model { dot, files } => run::analyze(&Verb::Model { dot }, &files, jobs),
        Command::Claw { files } => run::analyze(&Verb::Claw, &files, jobs),
        Command::Mds { files } => run::analyze(&Verb::Mds, &files, jobs),
        Command::Mids { files } => run::analyze(&Verb::Mids, &files, jobs),
        Command::Mcds { files } => run::analyze(&Verb::Mcds, &files, jobs),
        Command::Steiner { terminals, files } => {
            run::analyze(&Verb::Steiner(terminals), &files, jobs)
        }
        Command::Hamcycle { files } => run::analyze(&Verb::HamCycle, &files, jobs),
        Command::Hampath { files } => run::analyze(&Verb::HamPath, &files, jobs),
        Command::Minleaf { files } => run::analyze(&Verb::MinLeaf, &files, jobs),
        Command::Gen { kind, n, seed, max_degree, max_piece_len, twin_multiplicity } => {
            match resolve_seed(seed) {
                Ok(seed) => generate(&GenSpec {
                    kind: kind.into(),
                    n,
                    seed,
                    params: GenParams { max_degree, max_piece_len, twin_multiplicity },
                }),
                Err(e) => {
                    eprintln!("gen: {e}");
                    2
                }
            }
        }
        Command::Verify { graph, certificate } => run::verify(&graph, &certificate),
        Command::Bench { sizes, kind, seed, ops } => match resolve_seed(seed) {
            Ok(seed) => {
                let sizes = sizes.unwrap_or_else(|| (14..=20).map(|k| 1usize << k).collect());
                let ops = ops
                    .unwrap_or_else(|| vec![OpArg::Recognize, OpArg::Mcds, OpArg::Hamcycle]);
                bench::bench(&sizes, kind.into(), seed, &ops)
            }
            Err(e) => {
                eprintln!("bench: {e}");
                2
            }
        },
    };
    ExitCode::from(code)
}
