use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod input;

use args::{Cli, Command};

/// Anything that ends the run with a nonzero exit code.
#[derive(Debug)]
pub enum Failure {
    /// At least one verification report failed, or a bound was violated.
    Verification(String),
    /// Malformed flags, state specs or an unwritable output path.
    Input(String),
    /// Entropy order outside `(0, 1]`.
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write to stdout: {e}"))),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Input("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    let (text, outcome) = match &cli.command {
        Command::Eval(a) => (commands::eval(a, cli.format)?, Ok(())),
        Command::Band(a) => (commands::band(a, cli.format)?, Ok(())),
        Command::Saturate(a) => (commands::saturate(a, cli.format)?, Ok(())),
        Command::Verify(a) => commands::verify(a, cli.format)?,
    };
    emit(cli, &text)?;
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
