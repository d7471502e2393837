use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    NotInRectangle { partition: String, rows: usize, cols: u32 },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("binomial index {k} outside 0..={n}")]
    BinomialRange { n: usize, k: usize },

    #[error("boundary mismatch: expected {expected}, found {found}")]
    BoundaryMismatch { expected: String, found: String },

    #[error("strand position {position} out of range for {strands} strands")]
    PositionOutOfRange { position: usize, strands: usize },

    #[error("invalid color {color} for rank {rank}")]
    InvalidColor { color: u8, rank: u8 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid thick diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("polynomial arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
