//! Library side of the `pellshift` binary: command execution and the two
//! output modes (human tables and structured JSON). The binary in `main.rs`
//! only parses arguments and forwards here, so everything is testable
//! in-process.

pub mod commands;
pub mod envelope;
pub mod render;

use thiserror::Error;

/// Errors split by exit code: domain failures exit 1, usage failures exit 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<pellshift_core::Error> for CliError {
    fn from(e: pellshift_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
