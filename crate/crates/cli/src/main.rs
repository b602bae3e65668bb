//! `selfdecomp`: characteristic functions, driving distribution functions, samplers and
//! identity checks from the command line.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cf(a) => commands::cf(a),
        Command::Bddf(a) => commands::bddf(a),
        Command::Sample(a) => commands::sample(a),
        Command::Moments(a) => commands::moments(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("selfdecomp: {e}");
            e.exit_code()
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}
