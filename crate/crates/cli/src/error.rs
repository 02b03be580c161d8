use rankagg_core::profile::ProfileError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    /// A condition the command needs does not hold. `output` still goes to
    /// stdout (for example the uncovered cycle that blocks aggregation).
    #[error("{message}")]
    Precondition { message: String, output: Option<String> },
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Precondition { .. } => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<ProfileError> for CliError {
    fn from(e: ProfileError) -> Self {
        CliError::Validation(e.to_string())
    }
}
