//! Library half of the `linkwidth` binary: command implementations, the
//! report envelope and output formatting.

pub mod commands;
pub mod envelope;
pub mod format;
pub mod selfcheck;

pub use envelope::ReportEnvelope;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] linkwidth_core::Error),
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("input is not valid UTF-8")]
    Encoding,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "Io",
            CliError::Encoding => "MalformedInput",
        }
    }

    /// 3 for a violated hypothesis, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(linkwidth_core::Error::HypothesisViolated(_)) => 3,
            _ => 2,
        }
    }
}
