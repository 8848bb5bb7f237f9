//! Library backing the `kmspec` binary: chain specification files, CSV
//! emission, deterministic Monte Carlo validation, and the acceptance
//! report shared between the `report` subcommand and the test suite.

pub mod chainspec;
pub mod csvfmt;
pub mod mc;
pub mod report;

use std::fmt;

/// CLI-level failure classes, mapped to exit codes by `main`:
/// configuration problems exit 2, module errors exit 3 (check failures
/// exit 1 without an error value).
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Module(kmspec_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            CliError::Module(e) => write!(f, "computation failed: {e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kmspec_core::Error> for CliError {
    fn from(e: kmspec_core::Error) -> Self {
        CliError::Module(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl CliError {
    /// Machine-readable error record for stderr.
    pub fn to_json(&self) -> String {
        let (kind, message) = match self {
            CliError::Config(m) => ("config", m.clone()),
            CliError::Module(e) => ("module", e.to_string()),
            CliError::Io(e) => ("io", e.to_string()),
        };
        format!(
            "{{\"error\":{},\"kind\":{}}}",
            serde_json::to_string(&message).unwrap(),
            serde_json::to_string(kind).unwrap()
        )
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 2,
            CliError::Module(_) => 3,
        }
    }
}
