use thiserror::Error;

use crate::ring::RingError;

pub type Result<T, E = SchurError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("a model needs n >= 2 and d >= 1, got n = {n}, d = {d}")]
    InvalidParameters { n: usize, d: usize },
    #[error("{n}^{d} words exceeds the word cap of {cap}")]
    SizeLimit { n: usize, d: usize, cap: usize },
    #[error("weight {weight:?} is not a composition of {d} into {n} parts")]
    BadWeight { weight: Vec<u32>, n: usize, d: usize },
    #[error("{what} index {index} is out of range")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("{0} is not available in this mode")]
    WrongMode(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("operator is not in the span of the basis")]
    NotInSpan,
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("invalid basis label: {0}")]
    InvalidLabel(String),
}
