use thiserror::Error;

/// Errors produced by the matrix kernels, the identities and the file layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not skew-symmetric: entry ({row}, {col}) is not the negative of ({col}, {row})")]
    NotSkew { row: usize, col: usize },

    #[error("operation requires an even dimension, got {0}")]
    OddDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid matrix dimension {0}")]
    InvalidDimension(usize),

    #[error("dimension {dim} exceeds the brute-force oracle cap of {cap}")]
    DimensionTooLargeForOracle { dim: usize, cap: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("anticommutation precondition violated: {0}")]
    AnticommutationViolated(&'static str),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input or a request the tool cannot
    /// serve, as opposed to a mathematical property of a valid input.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Io(_)
                | Error::DimensionMismatch { .. }
                | Error::InvalidDimension(_)
                | Error::DimensionTooLargeForOracle { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
