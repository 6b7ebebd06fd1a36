use std::process::ExitCode;

use clap::Parser;
use phylo_consensus_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("phylocons: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
