mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Outcome, EXIT_FAILURE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Outcome = match &cli.command {
        Command::Seq(a) => commands::seq(a, cli.format),
        Command::Curl(a) => commands::curl(a, cli.format),
        Command::Verify(a) => commands::verify(a, cli.format),
        Command::Tables(a) => commands::tables(a, cli.format),
        Command::ScanConjecture(a) => commands::scan_conjecture(a, cli.format),
    };

    if let Some(note) = &outcome.stderr {
        eprint!("{note}");
    }
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.stdout),
        None => std::io::stdout()
            .lock()
            .write_all(outcome.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::from(outcome.code)
}
