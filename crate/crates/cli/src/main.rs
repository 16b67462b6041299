mod commands;
mod fail;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use ordseq_core::group::MAX_GROUP_ORDER;

/// Order sequences of finite groups: compute, compare, verify.
#[derive(Debug, Parser)]
#[command(name = "ordseq", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = ordseq_theorems::DEFAULT_SEED)]
    pub seed: u64,
    /// Refuse to build groups larger than this.
    #[arg(long, global = true, default_value_t = MAX_GROUP_ORDER)]
    pub max_size: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order sequence, psi, psi2, rho, exponent and nilpotency of a group.
    Os { expr: String },
    /// Domination between the order sequences of two groups of equal order.
    Compare { a: String, b: String },
    /// Hasse diagram of the sequence classes of a catalog order.
    Poset {
        order: u64,
        /// DOT output (the default unless --json is given).
        #[arg(long)]
        dot: bool,
    },
    /// Run verification suites.
    #[command(group(ArgGroup::new("selector").required(true).multiple(true).args(["all", "suite", "stretch"])))]
    Verify {
        /// Every suite except the stretch ones.
        #[arg(long)]
        all: bool,
        /// Run one suite by name; repeatable.
        #[arg(long)]
        suite: Vec<String>,
        /// Include the stretch suites.
        #[arg(long)]
        stretch: bool,
        /// Restrict order-parametrized suites to this order.
        #[arg(long)]
        order: Option<u64>,
        /// Prime for the partition suite.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Plausibility and catalog matches for a collected sequence.
    Realize { sequence: String, order: u64 },
    /// Power graph, directed power graph or prime graph of a group.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        expr: String,
    },
    /// Partitions and abelian p-groups.
    Partition {
        #[command(subcommand)]
        op: PartitionOp,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Power,
    Dpower,
    Gk,
}

#[derive(Debug, Subcommand)]
pub enum PartitionOp {
    /// Elements and cyclic subgroups of each order in the abelian p-group.
    Counts { p: u64, partition: String },
    /// Collected order sequence of the abelian p-group.
    Sequence { p: u64, partition: String },
    /// Defining partition recovered from an order sequence.
    Identify { sequence: String, p: u64 },
    /// Conjugate partition.
    Conjugate { partition: String },
    /// Majorization between two partitions of the same number.
    Compare { a: String, c: String },
    /// Box moves from `a` down to `c`.
    Chain { a: String, c: String },
    /// Every partition of n with its conjugate and divisor product.
    List { n: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
