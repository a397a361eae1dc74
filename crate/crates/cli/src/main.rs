use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use perfseq_cli::{run, Cli, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            match e {
                CliError::Io { .. } | CliError::Usage(_) | CliError::Document(_) => EXIT_USAGE,
            }
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
