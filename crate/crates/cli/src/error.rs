//! Command-line errors and their exit codes.

use thiserror::Error;

/// Everything a command can fail with.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bounds or input files: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation contradicted a structural invariant, or a verification
    /// identity failed: exit code 3.
    #[error("{0}")]
    Invariant(String),
    /// Reading or writing a file failed: exit code 2.
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// The process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Invariant(_) => 3,
        }
    }

    /// Wraps an I/O error with the path it concerns.
    pub fn io(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

impl From<hlkostka::Error> for CliError {
    fn from(e: hlkostka::Error) -> Self {
        use hlkostka::Error as E;
        match e {
            E::Parse(_) | E::Bounds(_) | E::InvalidPartition(_) | E::PaddingTooSmall { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
