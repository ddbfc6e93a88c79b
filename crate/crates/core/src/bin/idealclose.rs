use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use idealclose::cli::{run_text, selftest, RunOptions};
use idealclose::closure::Budget;

#[derive(Parser)]
#[command(name = "idealclose", version, about = "Closure operations on ideals, checked exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session file
    Run {
        file: PathBuf,
        /// Search bounds, e.g. `e_max=6,n_max=8`
        #[arg(long, default_value_t = Budget::default())]
        budget: Budget,
        /// Write the JSON-lines report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Fail on undecided checks
        #[arg(long)]
        strict: bool,
    },
    /// Run the embedded acceptance sessions
    Selftest,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run { file, budget, json, strict } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let outcome = run_text(&text, &RunOptions { budget, strict });
            print!("{}", outcome.table());
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, outcome.jsonl()) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if let Some(e) = &outcome.error {
                eprintln!("{e}");
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Command::Selftest => {
            let report = selftest(&RunOptions::default());
            for line in &report.lines {
                println!("{line}");
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
