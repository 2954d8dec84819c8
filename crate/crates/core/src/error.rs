use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("not expressible in invariant generators: {0}")]
    NotInvariant(String),

    #[error("inhomogeneous relation: {0}")]
    Inhomogeneous(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
