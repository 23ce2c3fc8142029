use thiserror::Error;

/// Errors raised by the library. Every public operation returns `Result<T, Error>`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("Jacobi identity fails on basis triple ({}, {}, {}): residual {residual}", .triple.0, .triple.1, .triple.2)]
    Jacobi {
        triple: (usize, usize, usize),
        residual: String,
    },

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: String, cap: u64 },

    #[error("certificate failure: {0}")]
    Certificate(String),

    #[error("unsupported regime: {0}")]
    Unsupported(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("cancelled")]
    Cancelled,

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Capacity, undetermined-certificate and unsupported-regime errors mean "could not
    /// decide under the configured limits", as opposed to a wrong input.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. } | Error::Unsupported(_) | Error::Cancelled
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
