//! Elimination pipeline for the genus-one ansatz with a quartic model
//! `y^2 = 1 + a x + b x^2 + c x^3 + x^4`.

pub mod cases;
pub mod golden;
pub mod pipeline;
pub mod symbolic;
#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::curve::CurveError;
use crate::poly::PolyError;
use crate::series::SeriesError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeriveError {
    #[error("singular system: {0}")]
    Singular(String),
    #[error("inconsistent pipeline state: {0}")]
    Inconsistent(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}
