use thiserror::Error;

/// Errors shared across the crate. Callers map these onto process exit
/// codes: invalid input -> 2, cap overflow -> 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource cap exceeded while {what}: needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
