//! Library half of the `toric` command-line tool: JSON cone files,
//! machine-readable analysis reports, the analysis/verification driver,
//! and example-family emission with prediction sidecars.

pub mod analyze;
pub mod family_io;
pub mod report;
pub mod spec_file;

use std::fmt;

/// CLI-facing error classes, mapped onto process exit codes:
/// input problems exit 2, verification failures exit 1, and breaches of
/// internal cross-checks exit 3.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal invariant breach: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<toric_core::Error> for CliError {
    fn from(e: toric_core::Error) -> Self {
        match e {
            toric_core::Error::Unsupported(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
