//! `chentropy`: command-line access to the entropy, limit and identity
//! computations.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 configuration error,
//! 3 numerical error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod config;
mod output;

use std::io;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numeric(christoffel_entropy::Error),
    Io(io::Error),
}

impl From<christoffel_entropy::Error> for CliError {
    fn from(e: christoffel_entropy::Error) -> Self {
        use christoffel_entropy::Error as E;
        match e {
            E::Config(m) => CliError::Config(m),
            E::Domain { .. } | E::Index { .. } => CliError::Config(e.to_string()),
            other => CliError::Numeric(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Numeric(e) => write!(f, "numerical error: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Entropy(a) => commands::entropy(a),
        Command::Limit(a) => commands::limit(a),
        Command::Zeros(a) => commands::zeros(a),
        Command::Verify(a) => commands::verify(a),
        Command::Scan(a) => commands::scan(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("chentropy: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
