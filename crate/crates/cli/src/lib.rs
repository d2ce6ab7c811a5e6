//! Command-line front end for `nijenhuis-core`: JSON documents, reports and
//! the `nijenhuis` binary.

pub mod docs;
pub mod report;

mod args;
mod commands;

use nijenhuis_core::exactnum::ParseScalarError;
use thiserror::Error;

pub use args::Cli;
pub use report::{CheckDoc, Report};

/// Every check passed.
pub const EXIT_PASS: i32 = 0;
/// A mathematical check failed; the report carries a witness.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Bad input, parse error or violated precondition.
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] nijenhuis_core::Error),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error("invalid document: {0}")]
    Invalid(String),
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_PASS, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::execute(cli.command) {
        Ok(commands::Output::Report(report)) => Outcome {
            code: if report.all_pass() { EXIT_PASS } else { EXIT_CHECK_FAILED },
            stdout: report.to_json(),
            stderr: String::new(),
        },
        Ok(commands::Output::Document(text)) => Outcome { code: EXIT_PASS, stdout: text, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
