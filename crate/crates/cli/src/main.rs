mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit status for a successful computation or a verified sweep.
pub const SUCCESS: u8 = 0;
/// Exit status for a refuted sweep or a failed round-trip self-check.
pub const CHECK_FAILED: u8 = 1;
/// Exit status for usage, parse and flag errors.
pub const USAGE: u8 = 2;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl From<partition_cores::Error> for Failure {
    fn from(e: partition_cores::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    // clap prints help/version with status 0 and usage errors with status 2
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let code = match commands::run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            USAGE
        }
        Err(Failure::Check(msg)) => {
            eprintln!("internal check failed: {msg}");
            CHECK_FAILED
        }
    };
    ExitCode::from(code)
}
