use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid generator {0}")]
    InvalidGenerator(i64),
    #[error("unknown type {0:?}")]
    UnknownType(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("infinite: {0}")]
    Infinite(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable reason tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidGenerator(_) => "invalid-generator",
            Error::UnknownType(_) => "unknown-type",
            Error::Validation(_) => "validation",
            Error::Infinite(_) => "infinite",
            Error::Cache(_) => "cache",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
