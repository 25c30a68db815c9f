use std::fmt;
use std::sync::Arc;

use crate::numeric::{Embed, embed_poly};
use crate::poly::{UPoly, URatFunc};
use crate::scalars::{Complex, Field, Ring};
use crate::series::{EXACT, LaurentSeries, LocalPlace, MAX_TERMS};

use super::{CurveError, CurveModel};

/// `P(x) + y Q(x)` in the function field of a model.
#[derive(Clone, Debug)]
pub struct FunctionFieldElement<K: Field> {
    model: Arc<CurveModel<K>>,
    p: URatFunc<K>,
    q: URatFunc<K>,
}

impl<K: Field> PartialEq for FunctionFieldElement<K> {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.q == o.q && (Arc::ptr_eq(&self.model, &o.model) || self.model == o.model)
    }
}

impl<K: Field> FunctionFieldElement<K> {
    pub fn new(model: Arc<CurveModel<K>>, p: URatFunc<K>, q: URatFunc<K>) -> Self {
        FunctionFieldElement { model, p, q }
    }

    pub fn from_polys(model: Arc<CurveModel<K>>, p: UPoly<K>, q: UPoly<K>) -> Self {
        Self::new(model, URatFunc::from_poly(p), URatFunc::from_poly(q))
    }

    pub fn constant(model: Arc<CurveModel<K>>, c: K) -> Self {
        Self::new(model, URatFunc::constant(c), URatFunc::zero())
    }

    pub fn x(model: Arc<CurveModel<K>>) -> Self {
        Self::from_polys(model, UPoly::x(), UPoly::zero())
    }

    pub fn y(model: Arc<CurveModel<K>>) -> Self {
        Self::from_polys(model, UPoly::zero(), UPoly::constant(K::one()))
    }

    pub fn model(&self) -> &Arc<CurveModel<K>> {
        &self.model
    }

    pub fn p(&self) -> &URatFunc<K> {
        &self.p
    }

    pub fn q(&self) -> &URatFunc<K> {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.q.is_zero() && self.p.is_polynomial() && self.p.numer().degree().unwrap_or(0) == 0
    }

    fn f(&self) -> URatFunc<K> {
        URatFunc::from_poly(self.model.f().clone())
    }

    fn same(&self, o: &Self) -> Result<(), CurveError> {
        if Arc::ptr_eq(&self.model, &o.model) || self.model == o.model {
            Ok(())
        } else {
            Err(CurveError::MismatchedModels)
        }
    }

    fn with(&self, p: URatFunc<K>, q: URatFunc<K>) -> Self {
        Self::new(self.model.clone(), p, q)
    }

    pub fn add(&self, o: &Self) -> Result<Self, CurveError> {
        self.same(o)?;
        Ok(self.with(self.p.clone() + &o.p, self.q.clone() + &o.q))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, CurveError> {
        self.same(o)?;
        Ok(self.with(self.p.clone() - &o.p, self.q.clone() - &o.q))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, CurveError> {
        self.same(o)?;
        let p = self.p.clone() * &o.p + &(self.q.clone() * &o.q * &self.f());
        let q = self.p.clone() * &o.q + &(self.q.clone() * &o.p);
        Ok(self.with(p, q))
    }

    pub fn neg(&self) -> Self {
        self.with(-self.p.clone(), -self.q.clone())
    }

    pub fn scale(&self, k: &K) -> Self {
        self.with(self.p.scale(k), self.q.scale(k))
    }

    pub fn add_constant(&self, k: &K) -> Self {
        self.with(self.p.clone() + &URatFunc::constant(k.clone()), self.q.clone())
    }

    /// `P - y Q`, the image under the hyperelliptic involution.
    pub fn conj(&self) -> Self {
        self.with(self.p.clone(), -self.q.clone())
    }

    /// `P^2 - f Q^2`.
    pub fn norm(&self) -> URatFunc<K> {
        self.p.clone() * &self.p - &(self.f() * &self.q * &self.q)
    }

    pub fn inverse(&self) -> Result<Self, CurveError> {
        if self.is_zero() {
            return Err(CurveError::ZeroElement);
        }
        let n = self.norm().try_inv().ok_or(CurveError::ZeroElement)?;
        Ok(self.with(self.p.clone() * &n, -(self.q.clone() * &n)))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CurveError> {
        self.mul(&o.inverse()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self, CurveError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.with(URatFunc::one(), URatFunc::zero());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// `dh / omega` with `omega = dx / y`, i.e. `(f Q' + f' Q / 2) + y P'`.
    pub fn d_over_omega(&self) -> Self {
        let half = K::from_rational(&crate::scalars::rat(1, 2));
        let fp = URatFunc::from_poly(self.model.f().derivative());
        let p = self.f() * &self.q.derivative() + &(fp * &self.q).scale(&half);
        self.with(p, self.p.derivative())
    }

    /// `dh / dx` as a function: `(d_over_omega) / y`.
    pub fn dx_derivative(&self) -> Self {
        let d = self.d_over_omega();
        let finv = self.f().try_inv().expect("model polynomial is nonzero");
        self.with(d.q.clone(), d.p * &finv)
    }

    fn series_of(r: &URatFunc<K>, x: &LaurentSeries<K>, order: usize) -> Result<LaurentSeries<K>, CurveError> {
        if r.is_zero() {
            return Ok(LaurentSeries::zero(x.var(), EXACT));
        }
        let n = x.eval_upoly(r.numer());
        if r.is_polynomial() {
            let c = r.denom().lc().inv();
            return Ok(n.scale(&c));
        }
        Ok(n * &x.eval_upoly(r.denom()).cap_relative(order as i64 + 2).inverse()?)
    }

    /// Local expansion at `place` using `order` terms of the coordinate series.
    pub fn local_series(&self, place: &LocalPlace<K>, order: usize) -> Result<LaurentSeries<K>, CurveError> {
        let e = self.model.expand(place, order)?;
        let p = Self::series_of(&self.p, &e.x, order)?;
        let q = Self::series_of(&self.q, &e.x, order)?;
        Ok(p + &(e.y * &q))
    }

    /// Valuation at `place`, raising the series order until it is determined.
    pub fn order_at(&self, place: &LocalPlace<K>) -> Result<i64, CurveError> {
        if self.is_zero() {
            return Err(CurveError::ZeroElement);
        }
        let mut order = 16;
        loop {
            match self.local_series(place, order) {
                Ok(s) => {
                    if let Some(v) = s.valuation() {
                        return Ok(v);
                    }
                }
                Err(CurveError::Series(crate::series::SeriesError::NotInvertible))
                | Err(CurveError::Series(crate::series::SeriesError::ZeroSeries)) => {}
                Err(e) => return Err(e),
            }
            if order >= MAX_TERMS {
                return Err(CurveError::PrecisionExhausted(order));
            }
            order = (order * 2).min(MAX_TERMS);
        }
    }

    /// Numeric value at an affine point of the embedded curve.
    pub fn eval_numeric(&self, x: &Complex, y: &Complex, prec: u32) -> Option<Complex>
    where
        K: Embed,
    {
        let ev = |r: &URatFunc<K>| -> Option<Complex> {
            let d = embed_poly(r.denom(), prec).eval(x);
            if d.is_zero() {
                return None;
            }
            Some(embed_poly(r.numer(), prec).eval(x) / &d)
        };
        Some(ev(&self.p)? + &(y.clone() * &ev(&self.q)?))
    }

    pub fn map_field<L: Field>(&self, model: Arc<CurveModel<L>>, f: impl Fn(&K) -> L) -> FunctionFieldElement<L> {
        FunctionFieldElement::new(model, self.p.map(&f), self.q.map(&f))
    }
}

/// The norms `n0 = N(h)` and `n1 = N(h - 1)`; always `n0 - n1 = 2P - 1`.
pub fn norms<K: Field>(beta: &FunctionFieldElement<K>) -> (URatFunc<K>, URatFunc<K>) {
    (beta.norm(), beta.add_constant(&-K::one()).norm())
}

impl<K: Field> fmt::Display for FunctionFieldElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "y*({})", self.q),
            (false, false) => write!(f, "{} + y*({})", self.p, self.q),
        }
    }
}
