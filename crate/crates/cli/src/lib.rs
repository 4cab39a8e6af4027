//! Command-line driver for binomial window certificates: single instances,
//! parameter sweeps, histograms and a floating-point cross-check.

pub mod args;
pub mod commands;
pub mod hist;
pub mod numeric;
pub mod oracle;
pub mod sweep;

use args::{Cli, Command};
use binocert::Verdict;
use std::io::Write;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] binocert::Error),
    #[error("cannot write {0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds = 0,
    Usage = 1,
    Violated = 2,
    Undecided = 3,
}

impl Status {
    /// Skipped instances count as holding.
    pub fn from_verdict(v: &Verdict) -> Status {
        match v {
            Verdict::Holds | Verdict::Skipped(_) => Status::Holds,
            Verdict::Violated => Status::Violated,
            Verdict::Undecided => Status::Undecided,
        }
    }

    pub fn code(self) -> i32 {
        self as i32
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Certify(a) => commands::certify(a, stdout),
        Command::Sweep(a) => commands::sweep(a, stdout),
        Command::Wallis(a) => commands::wallis_cmd(a, stdout),
        Command::Hist(a) => commands::hist_cmd(a, stdout),
        Command::Lemmas(a) => commands::lemmas(a, stdout),
    }
}
