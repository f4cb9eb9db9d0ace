use thiserror::Error;

/// Errors raised by the arithmetic layers and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    /// An exact division that the algebra guarantees failed; points at a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("table budget exceeded: field of size {size} > {budget}")]
    TableBudget { size: u64, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
