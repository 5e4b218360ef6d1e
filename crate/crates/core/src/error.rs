use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cell limit of {cap} exceeded while building Hom complex")]
    CapExceeded { cap: usize },
    #[error("{rows} x {cols} boundary matrix exceeds the dense memory limit")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("graph has {n} vertices, exact coloring limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("Betti number in dimension {requested} requested, complex certified only through {certified:?}")]
    Truncated {
        requested: usize,
        certified: Option<usize>,
    },
    #[error("involution fixes cell {index} in dimension {dim}")]
    NotFree { dim: usize, index: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Whether the error comes from a configured resource limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::MatrixTooLarge { .. })
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
