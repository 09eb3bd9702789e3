use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("weight is not integral")]
    NonIntegral,
    #[error("weight difference has a non-integer coordinate")]
    NonIntegerDifference,
    #[error("zero root has no coroot")]
    ZeroRoot,
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(String, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
