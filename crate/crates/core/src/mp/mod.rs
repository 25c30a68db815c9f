//! Mulase–Penkava quadratic differentials `(d beta)^2 / (beta (1 - beta))`.
//!
//! Differentials are stored as `h * omega^2` with `omega = dx / y`; residues are
//! reported without the `1 / (4 pi^2)` prefactor.

#[cfg(test)]
mod tests;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{CurveError, CurveModel, Divisor, FunctionFieldElement, divisor_of};
use crate::scalars::{Field, Ring};
use crate::series::{LaurentSeries, LocalPlace, MAX_TERMS, SeriesError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MpError {
    #[error("the differential of a constant function vanishes")]
    Constant,
    #[error("division by the zero differential")]
    ZeroDifferential,
    #[error("pole of order {0} exceeds the double poles that carry a quadratic residue")]
    PoleTooHigh(i64),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// `coeff * omega^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadDifferential<K: Field> {
    coeff: FunctionFieldElement<K>,
}

impl<K: Field> QuadDifferential<K> {
    pub fn new(coeff: FunctionFieldElement<K>) -> Self {
        QuadDifferential { coeff }
    }

    pub fn coeff(&self) -> &FunctionFieldElement<K> {
        &self.coeff
    }

    pub fn model(&self) -> &Arc<CurveModel<K>> {
        self.coeff.model()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, k: &K) -> Self {
        QuadDifferential::new(self.coeff.scale(k))
    }

    /// Since `omega` has neither zeros nor poles in genus one, this is the divisor of `coeff`.
    pub fn divisor(&self) -> Result<Divisor<K>, MpError> {
        if self.is_zero() {
            return Err(MpError::ZeroDifferential);
        }
        Ok(divisor_of(&self.coeff)?)
    }

    /// Local form `g(t) dt^2` at `place`.
    pub fn local_form(&self, place: &LocalPlace<K>, order: usize) -> Result<LaurentSeries<K>, MpError> {
        let e = self.model().expand(place, order)?;
        let h = self.coeff.local_series(place, order)?;
        let dx = e.dx();
        let yinv = e.y.cap_relative(order as i64 + 2).inverse().map_err(CurveError::from)?;
        let w = dx * &yinv;
        Ok(h * &w * &w)
    }

    /// Quadratic residue: the `t^-2` coefficient of the local form.
    pub fn residue_at(&self, place: &LocalPlace<K>) -> Result<K, MpError> {
        if self.is_zero() {
            return Err(MpError::ZeroDifferential);
        }
        // (dx/dt)^2 / y^2 is a unit at every place, so g has the valuation of coeff
        let mut order = 4;
        loop {
            let g = self.local_form(place, order)?;
            if let Some(v) = g.valuation()
                && v < -2
            {
                return Err(MpError::PoleTooHigh(-v));
            }
            if g.precision() > -2 {
                return quadratic_residue(&g).map_err(|e| CurveError::from(e).into());
            }
            if order >= MAX_TERMS {
                return Err(CurveError::PrecisionExhausted(order).into());
            }
            order = (order * 2).min(MAX_TERMS);
        }
    }
}

/// The `t^-2` coefficient of `g(t) dt^2`, refusing poles beyond order two.
pub fn quadratic_residue<K: Ring>(g: &LaurentSeries<K>) -> Result<K, SeriesError> {
    g.coefficient_of(-2)
}

/// `(d beta)^2 / (beta (1 - beta))` as a multiple of `omega^2`.
pub fn mp<K: Field>(beta: &FunctionFieldElement<K>) -> Result<QuadDifferential<K>, MpError> {
    if beta.is_constant() {
        return Err(MpError::Constant);
    }
    let d = beta.d_over_omega();
    let one_minus = beta.neg().add_constant(&K::one());
    let den = beta.mul(&one_minus)?;
    Ok(QuadDifferential::new(d.mul(&d)?.div(&den)?))
}

/// Quadratic residue of `mp(beta)` at `place`, read off the local series of `beta` alone.
pub fn mp_residue_at<K: Field>(beta: &FunctionFieldElement<K>, place: &LocalPlace<K>) -> Result<K, MpError> {
    if beta.is_constant() {
        return Err(MpError::Constant);
    }
    let mut order = 8;
    loop {
        let b = beta.local_series(place, order)?;
        let db = b.derivative();
        let den = b.clone() * &(LaurentSeries::constant(b.var(), K::one(), b.precision()) - &b);
        let inv = den.cap_relative(order as i64).inverse().map_err(CurveError::from)?;
        let g = db.clone() * &db * &inv;
        if let Some(v) = g.valuation()
            && v < -2
        {
            return Err(MpError::PoleTooHigh(-v));
        }
        if g.precision() > -2 {
            return quadratic_residue(&g).map_err(|e| CurveError::from(e).into());
        }
        if order >= MAX_TERMS {
            return Err(CurveError::PrecisionExhausted(order).into());
        }
        order = (order * 2).min(MAX_TERMS);
    }
}

/// Checks `mp(1/beta) * (-beta) = mp(beta)` exactly.
pub fn mp_inverse_identity<K: Field>(beta: &FunctionFieldElement<K>) -> Result<bool, MpError> {
    let lhs = mp(&beta.inverse()?)?.coeff().mul(&beta.neg())?;
    Ok(lhs == *mp(beta)?.coeff())
}

/// `-coeff(mp_b) / coeff(mp_binv)`, which is `beta` when the inputs come from one function.
pub fn recover_beta<K: Field>(mp_b: &QuadDifferential<K>, mp_binv: &QuadDifferential<K>) -> Result<FunctionFieldElement<K>, MpError> {
    if mp_binv.is_zero() || mp_b.is_zero() {
        return Err(MpError::ZeroDifferential);
    }
    Ok(mp_b.coeff().div(mp_binv.coeff())?.neg())
}

impl<K: Field> fmt::Display for QuadDifferential<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * (dx/y)^2", self.coeff)
    }
}
