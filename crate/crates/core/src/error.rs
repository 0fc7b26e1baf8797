use thiserror::Error;

/// Errors raised by the library. Infeasible tilings are values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: u64 },

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
