use clap::Parser;
use hexfourier::cli::{run, Cli, RunError};
use std::fs::File;
use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.output {
        Some(path) => File::create(path)
            .map_err(|error| {
                RunError::Failure(format!("cannot create {}: {error}", path.display()))
            })
            .and_then(|mut file| run(&cli, &mut file)),
        None => run(&cli, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
