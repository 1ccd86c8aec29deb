use pile_core::PileError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid run spec: {0}")]
    Validation(String),

    #[error(transparent)]
    Model(#[from] PileError),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// One or more verification checks exceeded their tolerance.
    #[error("verification failed: {0}")]
    Tolerance(String),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        CliError::Io { path: path.as_ref().display().to_string(), source }
    }

    /// Process exit status: 1 for invalid input, 2 for numeric or tolerance failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(PileError::Numeric(_) | PileError::NonMonotone(_)) => 2,
            CliError::Tolerance(_) => 2,
            _ => 1,
        }
    }
}
