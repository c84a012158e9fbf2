use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use treeirr::DEFAULT_MAX_K;

#[derive(Debug, Parser)]
#[command(
    name = "treeirr",
    version,
    about = "Irregularity indices of trees with a given internal degree sequence"
)]
pub struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexChoice {
    Irr,
    Sigma,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a sequence and print its vertex and leaf counts.
    Validate {
        #[arg(long)]
        seq: String,
    },
    /// List every non-isomorphic realization of a sequence.
    Enumerate {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Largest number of internal vertices to accept.
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
    },
    /// Minimum and maximum index values with all optimal realizations.
    Extremal {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value = "both")]
        index: IndexChoice,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Compare against the published values recorded for this sequence.
        #[arg(long)]
        check_paper: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
    },
    /// Check the max-min gap 2(d2 - d3) for every three-degree sequence up
    /// to a maximum degree.
    Conjecture {
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Recompute the published worked-example tables and mark each cell.
    PaperTables {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}
