//! `uwis`: unique maximum-weight independent sets from the command line.
//!
//! Exit codes: 0 unique or pass, 3 not unique, 1 usage or input error,
//! 2 capacity exceeded, 4 cross-validation disagreement.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uwis_core::characterize::Method;
use uwis_core::generate::FuzzMode;
use uwis_core::Limits;

use crate::output::Out;

#[derive(Parser)]
#[command(
    name = "uwis",
    version,
    about = "Detect and certify unique maximum-weight independent sets"
)]
pub struct Cli {
    /// Largest graph the exhaustive oracle will enumerate.
    #[arg(long, global = true, default_value_t = Limits::default().oracle_vertices)]
    oracle_cap: usize,
    /// Largest ground set for the subset-quantified checks.
    #[arg(long, global = true, default_value_t = Limits::default().subset_size)]
    subset_cap: usize,
    /// Print `key=value` records instead of text.
    #[arg(long, global = true)]
    json_lines: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Maximum weight and an α-set, with a uniqueness verdict.
    Solve {
        file: PathBuf,
        /// List every α-set (exhaustive, subject to --oracle-cap).
        #[arg(long)]
        all: bool,
    },
    /// Run one uniqueness test against an α-set.
    Check {
        file: PathBuf,
        #[arg(long, value_parser = parse_method)]
        method: Method,
        /// Comma-separated labels of the α-set to test (default: one found by
        /// branch and bound).
        #[arg(long)]
        set: Option<String>,
    },
    /// Perturbation radius of the unique α-set.
    Epsilon {
        file: PathBuf,
        #[arg(long)]
        set: Option<String>,
    },
    /// Sample perturbations within the radius and re-solve each.
    Stability {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        set: Option<String>,
    },
    /// Build a hardness gadget from a graph and a target weight.
    Reduce {
        #[arg(value_enum)]
        problem: Problem,
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Decide both sides of the equivalence with the oracle.
        #[arg(long)]
        verify: bool,
        /// Write the constructed graph here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Is a maximum-weight matching of an edge-weighted graph unique?
    MatchingCheck {
        file: PathBuf,
        /// Comma-separated edges `u-v` (default: one found by the oracle).
        #[arg(long)]
        matching: Option<String>,
    },
    /// Winner determination for a single-minded combinatorial auction.
    Auction { file: PathBuf },
    /// Emit a seeded stream of random graphs.
    Gen {
        #[command(flatten)]
        stream: StreamArgs,
        /// Write `gen-<i>.gwis` files here instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Cross-validate every test against the oracle on a seeded stream.
    Fuzz {
        #[command(flatten)]
        stream: StreamArgs,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Stability trials per unique graph in perturbation mode.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Where reproducer files go on disagreement.
        #[arg(long, default_value = "uwis-reproducers")]
        reproducers: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Problem {
    Ui1,
    Ui2,
}

#[derive(Args)]
pub struct StreamArgs {
    #[arg(long, value_parser = parse_mode, default_value = "general")]
    mode: FuzzMode,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Fixed edge probability (default: drawn per graph).
    #[arg(long)]
    edge_prob: Option<f64>,
    /// Weight denominators, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    denominators: Vec<u64>,
    #[arg(long, default_value_t = 6)]
    max_weight: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: uwis_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<FuzzMode, String> {
    s.parse().map_err(|e: uwis_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let limits = Limits {
        oracle_vertices: cli.oracle_cap,
        subset_size: cli.subset_cap,
        ..Limits::default()
    };
    let out = Out {
        records: cli.json_lines,
    };
    match commands::run(cli.command, &limits, out) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() { 2 } else { 1 })
        }
    }
}
