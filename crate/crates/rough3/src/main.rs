use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rough3::cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(&Cli::parse());
    let mut stdout = std::io::stdout().lock();
    for line in &out.stdout {
        if writeln!(stdout, "{line}").is_err() {
            return ExitCode::from(rough3::cli::EXIT_INPUT);
        }
    }
    drop(stdout);
    for line in &out.stderr {
        eprintln!("{line}");
    }
    ExitCode::from(out.code)
}
