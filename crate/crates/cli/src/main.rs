use binocert_cli::args::Cli;
use binocert_cli::{run, Status};
use clap::error::ErrorKind;
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::Usage.code() as u8),
            };
        }
    };
    let mut out = std::io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::Usage.code() as u8)
        }
    }
}
