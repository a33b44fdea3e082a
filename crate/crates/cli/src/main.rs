use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pomset_codes_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.report.as_bytes());
    ExitCode::from(outcome.exit_code)
}
