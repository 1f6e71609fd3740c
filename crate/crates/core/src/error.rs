use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator x{index} does not exist in a free group of rank {rank}")]
    InvalidGenerator { index: u32, rank: u32 },
    #[error("generator index must be at least 1")]
    ZeroGenerator,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("expected {expected} images, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("not an automorphism")]
    NotAnAutomorphism,
    #[error("not a solution of the Yang-Baxter system")]
    NotASolution,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
