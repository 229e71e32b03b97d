//! Command line front end for `rankweight`.

pub mod codefile;
pub mod commands;
pub mod output;

use rankweight::codes::CodeError;
use rankweight::distribution::DistributionError;

/// Failures, each tied to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<DistributionError> for CliError {
    fn from(e: DistributionError) -> Self {
        match e {
            DistributionError::Code(c) => c.into(),
            DistributionError::BudgetExceeded { .. } | DistributionError::Underdetermined { .. } => {
                CliError::Resource(e.to_string())
            }
            DistributionError::InconsistentBTable(_) => CliError::Mismatch(e.to_string()),
            DistributionError::OutOfRange { .. } | DistributionError::InvalidParameters(_) => {
                CliError::Invalid(e.to_string())
            }
        }
    }
}
