//! Command implementations behind the `treeirr` binary.

pub mod args;
pub mod claims;
pub mod commands;
pub mod report;
mod table;

pub use args::{Cli, Command, Format, IndexChoice};
pub use commands::{
    cmd_conjecture, cmd_enumerate, cmd_extremal, cmd_paper_tables, cmd_validate, run, CliError,
};
