use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("operands live in different variable spaces")]
    SpaceMismatch,

    #[error("variable {0} has no image in a total substitution")]
    UnmappedVariable(String),

    #[error("variable {0} is invertible and cannot be specialized to zero")]
    ZeroOnInvertible(String),

    #[error("invalid permutation word: {0}")]
    InvalidWord(String),

    #[error("{word} is not a fixed point for lambda = ({lambda})")]
    NotFixedPoint { word: String, lambda: String },

    #[error("quotient ring is infinite-dimensional")]
    InfiniteQuotient,

    #[error("specialization stayed degenerate after {attempts} attempts: {detail}")]
    Degenerate { attempts: u32, detail: String },

    #[error("unknown {kind}: {value}")]
    UnknownName { kind: &'static str, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
