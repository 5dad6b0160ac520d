use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gdj_core::Error),

    #[error("{0}")]
    Precondition(String),

    #[error("promise violation: {0}")]
    PromiseViolation(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: invalid JSON: {source}", path.display())]
    Format {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl CliError {
    /// 2 precondition, 3 promise violation, 4 I/O or format.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Core(_) | CliError::Precondition(_) => 2,
            CliError::PromiseViolation(_) => 3,
            CliError::Io { .. } | CliError::Format { .. } => 4,
        })
    }
}
