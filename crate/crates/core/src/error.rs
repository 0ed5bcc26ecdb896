use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ by {gap:e}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },

    #[error("matrix has a non-finite entry at ({i},{j})")]
    NonFinite { i: usize, j: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
}
