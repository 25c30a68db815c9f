//! Scalar rings: exact rationals, real quadratic fields, and multiprecision floats.

mod bigfloat;
mod complex;
mod quad;
mod rational;
mod traits;

pub use bigfloat::{BigFloat, DEFAULT_PRECISION, rational_to_float};
pub use complex::{Complex, f64_to_rational};
pub use quad::{QuadExt, quad_mul};
pub use rational::{
    Rational, denominator_lcm, integer_sqrt_exact, numerator_gcd, rat, rat_int, rational_sqrt_exact,
};
pub use traits::{Field, Ring};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("quadratic fields differ: sqrt({left}) vs sqrt({right})")]
    MismatchedField { left: u64, right: u64 },
    #[error("{0} is not a square-free integer greater than 1")]
    NotSquareFree(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative integer")]
    NegativeSqrt,
    #[error("precision {0} is below the 53-bit minimum")]
    PrecisionTooLow(u32),
}
