//! Library side of the `tlfuzz` command: campaign setup, replay and
//! reporting. The binaries are thin argument parsers over these functions.

pub mod campaign;
pub mod report;

use std::fmt;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// The campaign reached its limit and found at least one crash.
    pub const CRASH_FOUND: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const TARGET_FAILURE: i32 = 3;
}

/// An error paired with the exit code it should produce.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub error: anyhow::Error,
}

impl CliError {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        CliError {
            code: exit::USAGE,
            error: error.into(),
        }
    }

    pub fn target(error: impl Into<anyhow::Error>) -> Self {
        CliError {
            code: exit::TARGET_FAILURE,
            error: error.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

impl std::error::Error for CliError {}
