//! Genus-one models `y^2 = f(x)`, their function fields, divisors and j-invariants.

mod divisor;
mod element;
mod model;
#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::poly::PolyError;
use crate::series::SeriesError;

pub use divisor::{Cluster, Divisor, NumericDivisor, NumericPoint, divisor_of};
pub use element::{FunctionFieldElement, norms};
pub use model::{CurveModel, j_of_poly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("model polynomial must have degree 3 or 4, got {0}")]
    BadDegree(usize),
    #[error("model polynomial has a repeated root")]
    Singular,
    #[error("operation needs a nonzero function")]
    ZeroElement,
    #[error("elements live on different models")]
    MismatchedModels,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("valuation not determined within {0} series terms")]
    PrecisionExhausted(usize),
    #[error("divisor has degree {0}, expected 0")]
    NonzeroDegree(i64),
    #[error("numeric root isolation failed: {0}")]
    Numeric(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
