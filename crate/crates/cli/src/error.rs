use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}: {error}")]
    Operand {
        source_name: String,
        error: kaluza::ParseError,
    },
    #[error("cannot read {}: {error}", path.display())]
    Read { path: PathBuf, error: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0} verification sections failed")]
    VerificationFailed(usize),
    #[error(transparent)]
    Factorization(#[from] kaluza::FactorizationError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Operand { .. } | CliError::Read { .. } | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
