use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiralError {
    /// A caller-supplied argument is outside its documented domain.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The value is missing data the operation needs (e.g. bond geometry).
    #[error("invalid state: {0}")]
    State(String),
    /// Chain topology is inconsistent (dangling or one-way links, cycles, ...).
    #[error("invalid structure: {0}")]
    Structure(String),
    /// A documented invariant does not hold for the input.
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = ChiralError> = std::result::Result<T, E>;
