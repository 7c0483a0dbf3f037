use std::fmt;

use qent_core::QentError;

/// Failure classes, each with its own process exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad flags, unknown ids, dimensions that do not fit the command.
    Usage(String),
    /// Unreadable or malformed input file.
    Parse(String),
    /// Input parsed but is not a valid state, or a reproduction diff failed.
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Validation(m) => write!(f, "validation error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<QentError> for CliError {
    fn from(e: QentError) -> Self {
        match e {
            QentError::Dimension(_)
            | QentError::InvalidParameter(_)
            | QentError::Unsupported(_)
            | QentError::Empty(_) => CliError::Usage(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
