use std::io;
use std::process::ExitCode;

use clap::Parser;
use legendre_abel::cli::{run, Cli, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}\n\nRun with --help for usage.");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let status = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status as u8)
}
