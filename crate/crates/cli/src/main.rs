//! `hlkostka`: tables and verification of multi-parameter Kostka functions.
//!
//! Exit codes: 0 success, 2 usage or bounds error, 3 invariant breach or a
//! failed verification check.

mod commands;
mod config;
mod error;

use clap::Parser;

use config::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => commands::table(a),
        Command::Verify(a) => commands::verify(a),
        Command::Specialize(a) => commands::specialize(a),
    };
    if let Err(e) = result {
        eprintln!("hlkostka: error: {e}");
        std::process::exit(e.exit_code());
    }
}
