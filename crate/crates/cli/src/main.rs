// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe`: relation suites, landscape data and state reports.
//!
//! Exit status is 0 on success, 1 when a residual exceeds its tolerance,
//! and 2 for usage or configuration errors. `YBE_THREADS` caps the number
//! of worker threads.

mod args;
mod cmd;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliError;

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("YBE_THREADS") else {
        return Ok(());
    };
    let n: usize = match raw.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => return Err(CliError::Usage(format!("YBE_THREADS must be a positive integer, got {raw:?}"))),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))
}

fn run(cli: &Cli) -> Result<(), CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Verify(a) => cmd::verify::run(a),
        Command::Landscape(a) => cmd::landscape::run(a),
        Command::Extrema(a) => cmd::extrema::run(a),
        Command::State(a) => cmd::state::run(a),
        Command::Reduce(a) => cmd::reduce::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ybe: {e}");
            e.exit_code()
        }
    }
}
