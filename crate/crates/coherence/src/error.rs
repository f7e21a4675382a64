use thiserror::Error;

/// Errors shared across the workbench.
///
/// Anything user-facing (CLI, file formats) is rendered through [`Error`]'s
/// `Display` impl, so messages should stand on their own without source
/// context.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("type error: {0}")]
    Typing(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown theory `{0}`")]
    UnknownTheory(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("model error: {0}")]
    Model(String),

    #[error("strand mismatch: {0}")]
    Strands(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid data: {0}")]
    Invalid(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn arity(msg: impl Into<String>) -> Self {
        Error::Arity(msg.into())
    }
    pub fn typing(msg: impl Into<String>) -> Self {
        Error::Typing(msg.into())
    }
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn model(msg: impl Into<String>) -> Self {
        Error::Model(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
