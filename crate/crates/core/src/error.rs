use thiserror::Error;

/// Errors raised by the library. Variants map onto the CLI exit codes:
/// `Input` and `Contract` are usage problems, `Resource` means a
/// configured cap was hit before an answer was reached.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KrullError {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, KrullError>;

impl KrullError {
    pub fn input(msg: impl Into<String>) -> Self {
        KrullError::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        KrullError::Resource(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        KrullError::Contract(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        KrullError::Unsupported(msg.into())
    }
}
