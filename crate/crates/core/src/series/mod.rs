//! Truncated Laurent series and local expansions of `y` on `y^2 = f(x)`.

mod laurent;
mod place;

pub use laurent::LaurentSeries;
pub use place::{Branch, LocalExpansion, LocalPlace, expand_y};

use thiserror::Error;

/// Largest number of terms any expansion may request.
pub const MAX_TERMS: usize = 64;

/// Precision of series known exactly, such as the coordinate of a local parameter.
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient of t^{requested} requested but the series is only known below t^{available}")]
    InsufficientPrecision { requested: i64, available: i64 },
    #[error("square root of a series of odd valuation {0}")]
    OddValuation(i64),
    #[error("leading coefficient is not a square in the coefficient ring")]
    NonSquareLeading,
    #[error("leading coefficient is not invertible")]
    NotInvertible,
    #[error("series vanishes to its precision")]
    ZeroSeries,
    #[error("substituted series has valuation {0}, expected at least 1")]
    NonPositiveValuation(i64),
    #[error("only series of valuation one with a unit leading coefficient can be reverted")]
    NotReversible,
    #[error("series is exact; truncate before inverting or taking roots")]
    UnboundedPrecision,
    #[error("at least one term must be requested")]
    OrderTooSmall,
    #[error("{0} terms requested, above the cap of 64")]
    CapExceeded(usize),
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("unsupported place: {0}")]
    UnsupportedPlace(String),
}

#[cfg(test)]
mod tests;
