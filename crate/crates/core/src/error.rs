use thiserror::Error;

/// Errors raised by the fission tree library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A nested partition that violates the uniform-depth or positivity rules.
    #[error("malformed tree: {0}")]
    Structure(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Input that parses but does not describe a valid object.
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("level presentation is not normalized: {0}")]
    Normalization(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An exactness invariant failed. Never caused by valid input.
    #[error("arithmetic inconsistency: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
