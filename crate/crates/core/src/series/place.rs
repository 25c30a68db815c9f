use std::fmt;

use crate::poly::UPoly;
use crate::scalars::Ring;

use super::{EXACT, LaurentSeries, MAX_TERMS, SeriesError};

/// Which of the two places over `x = infinity` on a quartic model.
///
/// `Plus` has `y ~ +sqrt(lc) x^2`, `Minus` has `y ~ -sqrt(lc) x^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

/// A place of `y^2 = f(x)` with coordinates in the coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub enum LocalPlace<K> {
    /// `(x0, y0)` with `y0 != 0`; parameter `t = x - x0`.
    Finite { x0: K, y0: K },
    /// `(x0, 0)`; parameter `t = y`.
    Ramified { x0: K },
    /// One of two places at infinity of a quartic model; parameter `t = 1/x`.
    Infinite(Branch),
    /// The single place at infinity of a cubic model; parameter `t = x/y`.
    InfiniteCubic,
}

impl<K: Ring> fmt::Display for LocalPlace<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalPlace::Finite { x0, y0 } => write!(f, "({x0}, {y0})"),
            LocalPlace::Ramified { x0 } => write!(f, "({x0}, 0)"),
            LocalPlace::Infinite(Branch::Plus) => write!(f, "inf+"),
            LocalPlace::Infinite(Branch::Minus) => write!(f, "inf-"),
            LocalPlace::InfiniteCubic => write!(f, "inf"),
        }
    }
}

/// The coordinate functions `x(t)` and `y(t)` at a place.
#[derive(Clone, Debug)]
pub struct LocalExpansion<K> {
    pub x: LaurentSeries<K>,
    pub y: LaurentSeries<K>,
}

impl<K: Ring> LocalExpansion<K> {
    /// `dx/dt`.
    pub fn dx(&self) -> LaurentSeries<K> {
        self.x.derivative()
    }
}

fn check_order(order: usize) -> Result<(), SeriesError> {
    if order < 1 {
        return Err(SeriesError::OrderTooSmall);
    }
    if order > MAX_TERMS {
        return Err(SeriesError::CapExceeded(order));
    }
    Ok(())
}

/// Expands `x` and `y` at `place` on `y^2 = f(x)`, with `order` correct terms of `y`.
pub fn expand_y<K: Ring>(f: &UPoly<K>, place: &LocalPlace<K>, order: usize) -> Result<LocalExpansion<K>, SeriesError> {
    check_order(order)?;
    let deg = f.degree().ok_or(SeriesError::UnsupportedPlace("zero polynomial".into()))?;
    let n = order as i64;
    let t = "t";
    match place {
        LocalPlace::Finite { x0, y0 } => {
            if y0.square() != f.eval(x0) {
                return Err(SeriesError::NotOnCurve);
            }
            if y0.is_zero() {
                return Err(SeriesError::UnsupportedPlace("finite place with y = 0 is ramified".into()));
            }
            let shifted = f.taylor_shift(x0);
            let g = LaurentSeries::from_upoly(t, &shifted, n);
            let y = g.sqrt_with_root(y0)?;
            let x = LaurentSeries::new(t, 0, vec![x0.clone(), K::one()], EXACT);
            Ok(LocalExpansion { x, y })
        }
        LocalPlace::Ramified { x0 } => {
            if !f.eval(x0).is_zero() {
                return Err(SeriesError::NotOnCurve);
            }
            let shifted = f.taylor_shift(x0);
            // y^2 = g(x - x0) with g of valuation one; invert g and substitute t^2
            let g = LaurentSeries::from_upoly(t, &shifted, n + 1);
            if g.valuation() != Some(1) {
                return Err(SeriesError::UnsupportedPlace("singular point".into()));
            }
            let h = g.reversion()?;
            let tt = LaurentSeries::new(t, 2, vec![K::one()], 2 * n + 4);
            let dx = h.compose(&tt)?;
            let x = dx + &LaurentSeries::constant(t, x0.clone(), EXACT);
            let y = LaurentSeries::param(t, EXACT);
            Ok(LocalExpansion { x, y })
        }
        LocalPlace::Infinite(branch) => {
            if deg != 4 {
                return Err(SeriesError::UnsupportedPlace("two places at infinity need a quartic".into()));
            }
            let rev: Vec<K> = (0..=4).map(|i| f.coeff(4 - i)).collect();
            let g = LaurentSeries::new(t, 0, rev, n);
            let lc = f.lc();
            let root = if lc.is_one() { K::one() } else { lc.try_sqrt().ok_or(SeriesError::NonSquareLeading)? };
            let root = if *branch == Branch::Plus { root } else { -root };
            let y = g.sqrt_with_root(&root)?.shift(-2);
            let x = LaurentSeries::new(t, -1, vec![K::one()], EXACT);
            Ok(LocalExpansion { x, y })
        }
        LocalPlace::InfiniteCubic => {
            if deg != 3 {
                return Err(SeriesError::UnsupportedPlace("a single ramified place at infinity needs a cubic".into()));
            }
            // u = 1/x solves u = t^2 G(u), G(u) = f3 + f2 u + f1 u^2 + f0 u^3
            let prec = n + 2;
            let gpoly = UPoly::new((0..=3).map(|i| f.coeff(3 - i)).collect());
            let t2 = LaurentSeries::new(t, 2, vec![K::one()], prec);
            let mut u = LaurentSeries::zero(t, prec);
            for _ in 0..=(prec / 2 + 1) {
                u = (t2.clone() * &u.eval_upoly(&gpoly)).truncate(prec);
            }
            let x = u.inverse()?;
            let y = x.clone() * &LaurentSeries::new(t, -1, vec![K::one()], EXACT);
            Ok(LocalExpansion { x, y })
        }
    }
}
