//! Command-line front end. [`run_cli`] is the whole program; the binary
//! only wires it to the process streams.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub mod args;
mod commands;
pub mod report;

pub use commands::{CheckRecord, ENUMERATION_LIMIT};
pub use report::{emit_report, parse_report_csv, CountReportRow, REPORT_HEADER};

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or values; exit 2.
    Usage(String),
    Io(io::Error),
    Lib(hecke::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<hecke::Error> for CliError {
    fn from(e: hecke::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(
                hecke::Error::InvalidP { .. }
                | hecke::Error::ParityMismatch { .. }
                | hecke::Error::Syntax { .. }
                | hecke::Error::InvalidTuple(_),
            ) => 2,
            CliError::Io(_) | CliError::Lib(_) => 1,
        }
    }

    fn report(&self, err: &mut dyn Write) {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m.clone()),
            CliError::Io(e) => ("io", e.to_string()),
            CliError::Lib(e) => ("error", e.to_string()),
        };
        let _ = writeln!(
            err,
            "{}",
            serde_json::json!({ "status": "fail", "kind": kind, "message": message })
        );
    }
}

/// Runs one invocation; `argv[0]` is the program name. Returns the exit
/// code: 0 success, 1 failed check or internal error, 2 usage error.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(&cli.command, &mut buf);
    let passed = match result {
        Ok(passed) => passed,
        Err(e) => {
            e.report(err);
            return e.exit_code();
        }
    };
    let target = match &cli.command {
        Command::Enumerate(a) => &a.common.out,
        Command::Count(a) => &a.common.out,
        Command::Estimate(a) => &a.common.out,
        Command::Compare(a) => &a.common.out,
        Command::Verify(a) => &a.common.out,
        Command::PrimitiveRatio(a) => &a.out,
    };
    let written = match target {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buf)),
        None => out.write_all(&buf),
    };
    if let Err(e) = written {
        CliError::Io(e).report(err);
        return 1;
    }
    if passed {
        0
    } else {
        let _ = writeln!(
            err,
            "{}",
            serde_json::json!({ "status": "fail", "kind": "verify", "message": "one or more checks failed" })
        );
        1
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<bool, CliError> {
    match command {
        Command::Enumerate(a) => commands::enumerate(a, out).map(|_| true),
        Command::Count(a) => commands::count(a, out).map(|_| true),
        Command::Estimate(a) => commands::estimate(a, out).map(|_| true),
        Command::Compare(a) => commands::compare(a, out).map(|_| true),
        Command::Verify(a) => commands::verify(a, out),
        Command::PrimitiveRatio(a) => commands::primitive_ratio(a, out).map(|_| true),
    }
}
