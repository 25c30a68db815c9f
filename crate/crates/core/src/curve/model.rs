use std::fmt;

use crate::numeric::{Embed, embed_poly};
use crate::poly::UPoly;
use crate::scalars::{Complex, Field};
use crate::series::{Branch, LocalExpansion, LocalPlace, expand_y};

use super::CurveError;

/// Smooth genus-one model `y^2 = f(x)` with `deg f` three or four.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveModel<K> {
    f: UPoly<K>,
}

impl<K: Field> CurveModel<K> {
    pub fn new(f: UPoly<K>) -> Result<Self, CurveError> {
        let d = f.degree().unwrap_or(0);
        if d != 3 && d != 4 {
            return Err(CurveError::BadDegree(d));
        }
        if f.gcd(&f.derivative()).degree() != Some(0) {
            return Err(CurveError::Singular);
        }
        Ok(CurveModel { f })
    }

    pub fn f(&self) -> &UPoly<K> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.deg_i() as usize
    }

    pub fn is_cubic(&self) -> bool {
        self.degree() == 3
    }

    /// Whether the two places over infinity of a quartic are defined over the base field.
    pub fn split_at_infinity(&self) -> bool {
        !self.is_cubic() && (self.f.lc().is_one() || self.f.lc().try_sqrt().is_some())
    }

    /// Places over `x = infinity` that are defined over the base field.
    pub fn rational_places_at_infinity(&self) -> Vec<LocalPlace<K>> {
        if self.is_cubic() {
            vec![LocalPlace::InfiniteCubic]
        } else if self.split_at_infinity() {
            vec![LocalPlace::Infinite(Branch::Plus), LocalPlace::Infinite(Branch::Minus)]
        } else {
            vec![]
        }
    }

    pub fn contains(&self, place: &LocalPlace<K>) -> bool {
        match place {
            LocalPlace::Finite { x0, y0 } => !y0.is_zero() && y0.square() == self.f.eval(x0),
            LocalPlace::Ramified { x0 } => self.f.eval(x0).is_zero(),
            LocalPlace::Infinite(_) => self.split_at_infinity(),
            LocalPlace::InfiniteCubic => self.is_cubic(),
        }
    }

    /// The finite place over `x0`, if `f(x0)` is a square in the base field.
    pub fn point_over(&self, x0: &K, branch: Branch) -> Option<LocalPlace<K>> {
        let v = self.f.eval(x0);
        if v.is_zero() {
            return Some(LocalPlace::Ramified { x0: x0.clone() });
        }
        let r = if v.is_one() { K::one() } else { v.try_sqrt()? };
        let y0 = if branch == Branch::Plus { r } else { -r };
        Some(LocalPlace::Finite { x0: x0.clone(), y0 })
    }

    pub fn expand(&self, place: &LocalPlace<K>, order: usize) -> Result<LocalExpansion<K>, CurveError> {
        if !self.contains(place) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(expand_y(&self.f, place, order)?)
    }

    /// The j-invariant in the base field.
    pub fn j_invariant(&self) -> K {
        j_of_poly(&self.f)
    }

    /// The j-invariant of the embedded model.
    pub fn j_numeric(&self, prec: u32) -> Complex
    where
        K: Embed,
    {
        j_of_poly(&embed_poly(&self.f, prec))
    }

    /// `c * f` for a nonzero constant: the quadratic twist by `c`.
    pub fn twist(&self, c: &K) -> Result<Self, CurveError> {
        CurveModel::new(self.f.scale(c))
    }
}

/// Classical j of `y^2 = f(x)`: binary-quartic invariants for quartics, Weierstrass scaling for cubics.
pub fn j_of_poly<K: Field>(f: &UPoly<K>) -> K {
    let k = |n: i64| K::from_i64(n);
    if f.deg_i() == 4 {
        let (a, b, c, d, e) = (f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
        let i = k(12) * &a * &e - k(3) * &b * &d + c.square();
        let j = k(72) * &a * &c * &e + k(9) * &b * &c * &d - k(27) * &a * &d.square() - k(27) * &e * &b.square() - k(2) * &c.pow(3);
        let i3 = k(4) * &i.pow(3);
        k(1728) * &i3 / (i3.clone() - &j.square())
    } else {
        // (a3 y)^2 = X^3 + a2 X^2 + a1 a3 X + a0 a3^2 with X = a3 x
        let (a3, a2, a1, a0) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
        let w2 = a2;
        let w4 = a1 * &a3;
        let w6 = a0 * &a3.square();
        let b2 = k(4) * &w2;
        let b4 = k(2) * &w4;
        let b6 = k(4) * &w6;
        let c4 = b2.square() - k(24) * &b4;
        let c6 = -b2.pow(3) + k(36) * &b2 * &b4 - k(216) * &b6;
        let c43 = c4.pow(3);
        k(1728) * &c43 / (c43.clone() - &c6.square())
    }
}

impl<K: Field> fmt::Display for CurveModel<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}
