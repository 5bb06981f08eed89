use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller passed something out of contract (bad index set, p outside
    /// [0,1], malformed metric, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Operands have incompatible shapes.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A numerical routine left its accuracy contract (non-convergence,
    /// spectrum with an unexpectedly large imaginary part, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A threshold was requested where the entanglement metric never crosses
    /// zero.
    #[error("no ESD threshold: {0}")]
    NoThreshold(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
