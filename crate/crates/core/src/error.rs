use thiserror::Error;

use crate::fincat::{CategoryError, FunctorError};
use crate::matrix::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyadError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("({a},{b}) is not a composable pair")]
    NotComposable { a: String, b: String },
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("source category is not a groupoid: {0}")]
    NotGroupoid(String),
    #[error("source category is not connected")]
    NotConnected,
    #[error("not of action type: {0}")]
    NotActionType(String),
    #[error("bimodules do not share their middle algebra")]
    MiddleMismatch,
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),
    #[error("invalid R-matrix: {0}")]
    RMatrixInvalid(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = PolyadError> = std::result::Result<T, E>;

pub(crate) fn shape(what: impl Into<String>) -> PolyadError {
    PolyadError::ShapeMismatch(what.into())
}
