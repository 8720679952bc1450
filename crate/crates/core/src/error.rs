use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    /// A drawing breaks one of the structural invariants of the rotation-system model.
    #[error("structural violation: {0}")]
    Structural(String),

    /// The drawing is not simple (adjacent edges cross, or two edges cross more than once).
    #[error("non-simple drawing: {0}")]
    NonSimple(String),

    /// Degenerate geometric input (concurrency, vertex on an edge, overlap...).
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted (best lower bound found: {lower_bound})")]
    BudgetExhausted { lower_bound: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
