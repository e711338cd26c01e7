use thiserror::Error;

/// Errors raised by engine operations.
///
/// A failed law check is not an error: validation returns a
/// [`ValidationReport`](crate::ValidationReport). Errors are reserved for
/// malformed input, broken preconditions and exhausted budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error at {location}: {message}")]
    Input { location: String, message: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("enumeration budget exceeded: {0}")]
    Resource(String),
    #[error("arity {needed} exceeds truncation cap {cap}; rebuild with cap >= {needed}")]
    Truncation { cap: usize, needed: usize },
}

impl Error {
    pub(crate) fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
