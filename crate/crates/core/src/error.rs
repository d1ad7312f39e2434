use thiserror::Error;

/// Failures raised by constructions and verifications in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands live over different variable contexts.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Input lies outside the domain where a closed formula is defined,
    /// e.g. a denominator that vanishes.
    #[error("out of domain: {0}")]
    Domain(String),

    /// The data is degenerate for the requested computation.
    #[error("non-generic input: {0}")]
    NonGeneric(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
