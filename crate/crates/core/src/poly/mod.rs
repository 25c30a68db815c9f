//! Polynomials: sparse multivariate, dense univariate, gcd and resultants,
//! determinants, rational functions, and a text parser.

mod gcd;
mod linalg;
mod multi;
mod parse;
mod ratfunc;
mod resultant;
mod ufrac;
mod upoly;

pub use gcd::{content, factor_over_basis, gcd_free_basis, normalize, poly_gcd, squarefree_decomposition};
pub use linalg::{LinearSystem, cramer, det_cofactor, det_fraction_free};
pub use multi::{Monomial, MultiPoly};
pub use parse::{parse_poly, parse_rational_poly};
pub use ratfunc::RatFunc;
pub use resultant::{resultant, resultant_upoly, sylvester_resultant};
pub use ufrac::{URatFunc, poly_sqrt};
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    NotDivisible,
    #[error("polynomial has degree zero in `{0}`")]
    ZeroDegree(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix rows do not match the unknowns")]
    NotRectangular,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

#[cfg(test)]
mod tests;
