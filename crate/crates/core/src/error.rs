use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word that is not a permutation of `1..=n`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Malformed permutation or pattern text. `position` is a byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// An operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root-finding or other numeric procedure failed.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The sequence cache file does not match its schema, or a merge conflicts.
    #[error("cache error: {0}")]
    Cache(String),

    #[error("i/o error: {0}")]
    Io(String),

    /// A result that a proven statement rules out.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
