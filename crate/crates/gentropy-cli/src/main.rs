//! `gentropy` — compute and check group-induced entropy functions.
//!
//! Exit codes: 0 success / all checks pass, 1 semantic violation (an
//! inequality or membership check failed), 2 malformed input, 3 invariant
//! violation (e.g. an element list that is not a subgroup), 4 resource cap
//! exceeded.

mod args;
mod bound_cmd;
mod check_cmd;
mod cone_cmd;
mod entropy_cmd;
mod extend_cmd;
mod group_cmd;
mod linear_cmd;
mod out;
mod parse;
mod sweep_cmd;

use clap::Parser;

use args::{Cli, Command};

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError { code: 2, message: msg.into() }
    }

    pub fn invariant(msg: impl Into<String>) -> CliError {
        CliError { code: 3, message: msg.into() }
    }

    pub fn cap(msg: impl Into<String>) -> CliError {
        CliError { code: 4, message: msg.into() }
    }
}

/// Commands return the exit code (0 or 1) on success-with-result.
type CmdResult = Result<i32, CliError>;

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Group(ref cmd) => group_cmd::run(&cli, cmd),
        Command::Entropy(ref cmd) => entropy_cmd::run(&cli, cmd),
        Command::Linear(ref cmd) => linear_cmd::run(&cli, cmd),
        Command::Check(ref cmd) => check_cmd::run(&cli, cmd),
        Command::Sweep(ref cmd) => sweep_cmd::run(&cli, cmd),
        Command::Extend(ref cmd) => extend_cmd::run(&cli, cmd),
        Command::Cone(ref cmd) => cone_cmd::run(&cli, cmd),
        Command::Bound(ref cmd) => bound_cmd::run(&cli, cmd),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
