use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("invalid tableau: {0}")]
    Tableau(String),
    #[error("not an LR tableau: {0}")]
    NotLr(String),
    #[error("dimension mismatch: {0}")]
    Mismatch(String),
    #[error("invalid puzzle: {0}")]
    Puzzle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
