use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("matrix market: {0}")]
    MatrixMarket(String),

    #[error("negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("matrix is not symmetric at ({row}, {col}): {upper} vs {lower}")]
    Asymmetric {
        row: usize,
        col: usize,
        upper: f64,
        lower: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is outside the bound's domain [0, inf)")]
    Domain(f64),

    #[error(
        "graph is disconnected ({components} components); the graph theorems require a connected \
         graph, analyse each component separately or use the matrix path"
    )]
    Disconnected { components: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("bipartite bound column is not available: {0}")]
    NoBipartiteColumn(String),

    #[error("bound table was not produced from this source: {0}")]
    TableMismatch(String),
}
