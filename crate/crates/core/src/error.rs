use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    /// The proposed minimal polynomial splits; carries a printed nontrivial factor.
    #[error("minimal polynomial is reducible, factor {0}")]
    Reducible(String),

    #[error("polynomial does not divide exactly")]
    NotDivisible,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internally produced object failed its own re-verification.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
