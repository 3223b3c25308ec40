use thiserror::Error;

pub use crate::verify::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("not hermitian")]
    NotHermitian,

    #[error("nonzero diagonal")]
    NonzeroDiagonal,

    #[error("not a 0/1 zero-diagonal matrix")]
    NotZeroOne,

    #[error("not a symmetric 0/1 zero-diagonal matrix")]
    NotAdjacency,

    #[error("oracle size limit: {0}")]
    OracleSizeLimit(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not an equality configuration: {0}")]
    NotEqualityConfiguration(String),

    #[error("bound {bound} is not applicable to ensemble {ensemble}")]
    Inapplicable { bound: String, ensemble: String },

    #[error("counterexample found: {0}")]
    Counterexample(Box<Counterexample>),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
