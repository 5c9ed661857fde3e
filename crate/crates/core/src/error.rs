use thiserror::Error;

use crate::arith::ArithError;
use crate::operators::OperatorError;

/// Errors raised by family constructions, pairings, raising and shift
/// operators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("spectrum collision for {0}")]
    SpectrumCollision(String),
    #[error("triangularity violated for {0}")]
    Triangularity(String),
    #[error("evenness violated")]
    EvennessViolated,
    #[error("not proportional: {0}")]
    NotProportional(String),
    #[error("Rodrigues prefactor singular for {0}")]
    RodriguesSingular(String),
    #[error("divergent weight: gamma must exceed -1/2")]
    DivergentWeight,
    #[error("{0}")]
    Unsupported(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("grid out of bounds: {0}")]
    GridOutOfBounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
