use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use treeirr_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli.command) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            return ExitCode::FAILURE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, output.as_bytes()),
        None => std::io::stdout().lock().write_all(output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error[Io]: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
