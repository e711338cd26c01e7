//! Command-line front end and JSON document format.
//!
//! Exit codes: 0 when the property holds or the computation finished, 1 when
//! the property fails (a certificate is printed), 2 on input errors.

pub mod build;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{execute, Cli};
pub use document::{parse_document, serialize_document, Document};
pub use error::CliError;
pub use report::{Format, Report, Verdict};

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome { stdout: report.render(cli.format), stderr: String::new(), code: report.verdict.exit_code() },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
