use thiserror::Error;

use crate::webs::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {0} is outside the supported range (n >= 1)")]
    UnsupportedSize(usize),

    #[error("generator s_{index} is out of range for 2n = {size}")]
    GeneratorOutOfRange { index: usize, size: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("crossing arcs {0} and {1}")]
    CrossingArcs(Arc, Arc),

    #[error("arc {0} is not in the web")]
    ArcNotInWeb(Arc),

    #[error("parse error: {0}")]
    Parse(String),

    /// A condition the underlying theory guarantees failed to hold. Always a bug.
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
