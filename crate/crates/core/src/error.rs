use thiserror::Error;

use crate::contour::Triple;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid contour parameters {0}: {1}")]
    InvalidParams(Triple, &'static str),

    #[error("hexagonal dungeon needs a >= 1 and b >= 2a, got a={a}, b={b}")]
    InvalidHexagon { a: i64, b: i64 },

    #[error("aztec dungeon order must be at least 1, got {0}")]
    InvalidAztecOrder(i64),

    #[error("blum's formula is defined for a >= 1, got {0}")]
    InvalidBlumOrder(i64),

    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),

    #[error("graph is not bipartite: vertices {0} and {1} share a color")]
    NotBipartite(usize, usize),

    #[error("inconsistent rotation system: {0}")]
    Rotation(String),

    #[error("graph has {size} vertices, above the brute-force cap of {cap}; use the determinant method")]
    BruteCapExceeded { size: usize, cap: usize },

    #[error("kasteleyn determinant {0} is not a perfect square")]
    NotPerfectSquare(String),

    #[error("wall-clock budget exhausted")]
    Budget,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("not a perfect matching: {0}")]
    BadMatching(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
