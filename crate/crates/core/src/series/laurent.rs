use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::poly::UPoly;
use crate::scalars::Ring;

use super::{EXACT, SeriesError};

const MAX_INTERNAL_TERMS: i64 = 4096;

/// Truncated Laurent series `sum c_k t^k + O(t^prec)`.
///
/// `coeffs[i]` multiplies `t^(val + i)`; the first stored coefficient is
/// nonzero, and a series that vanishes to its precision stores nothing and has
/// `val == prec`.
#[derive(Clone, Debug)]
pub struct LaurentSeries<R> {
    var: Arc<str>,
    val: i64,
    coeffs: Vec<R>,
    prec: i64,
}

impl<R: Ring> LaurentSeries<R> {
    pub fn new(var: &str, val: i64, coeffs: Vec<R>, prec: i64) -> Self {
        Self::normalized(Arc::from(var), val, coeffs, prec)
    }

    fn normalized(var: Arc<str>, mut val: i64, mut coeffs: Vec<R>, prec: i64) -> Self {
        let keep = (prec - val).max(0) as usize;
        coeffs.truncate(keep);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        val += lead as i64;
        if coeffs.is_empty() {
            val = prec;
        }
        LaurentSeries { var, val, coeffs, prec }
    }

    fn with_same_var(&self, val: i64, coeffs: Vec<R>, prec: i64) -> Self {
        Self::normalized(self.var.clone(), val, coeffs, prec)
    }

    pub fn zero(var: &str, prec: i64) -> Self {
        Self::new(var, prec, vec![], prec)
    }

    pub fn constant(var: &str, c: R, prec: i64) -> Self {
        Self::new(var, 0, vec![c], prec)
    }

    /// The local parameter `t` itself.
    pub fn param(var: &str, prec: i64) -> Self {
        Self::new(var, 1, vec![R::one()], prec)
    }

    /// A polynomial in the parameter, truncated at `prec`.
    pub fn from_upoly(var: &str, p: &UPoly<R>, prec: i64) -> Self {
        Self::new(var, 0, p.coeffs().to_vec(), prec)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Exponent of the first nonzero coefficient, or `None` if zero to precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Number of known coefficients from the valuation on.
    pub fn relative_precision(&self) -> i64 {
        self.prec - self.val
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.first()
    }

    /// The exact coefficient of `t^k`.
    pub fn coefficient_of(&self, k: i64) -> Result<R, SeriesError> {
        if k >= self.prec {
            return Err(SeriesError::InsufficientPrecision { requested: k, available: self.prec });
        }
        if k < self.val {
            return Ok(R::zero());
        }
        Ok(self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(R::zero))
    }

    /// Coefficients of `t^lo .. t^(hi-1)`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Result<Vec<R>, SeriesError> {
        (lo..hi).map(|k| self.coefficient_of(k)).collect()
    }

    pub fn truncate(&self, prec: i64) -> Self {
        self.with_same_var(self.val, self.coeffs.clone(), prec.min(self.prec))
    }

    /// Truncates so that at most `n` terms past the valuation are kept.
    pub fn cap_relative(&self, n: i64) -> Self {
        match self.valuation() {
            Some(v) if self.prec - v > n => self.truncate(v + n),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.with_same_var(self.val, self.coeffs.iter().map(|c| c.clone() * k).collect(), self.prec)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.with_same_var(self.val + k, self.coeffs.clone(), self.prec + k)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentSeries<S> {
        LaurentSeries::normalized(self.var.clone(), self.val, self.coeffs.iter().map(f).collect(), self.prec)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c.clone() * &R::from_i64(self.val + i as i64)).collect();
        self.with_same_var(self.val - 1, coeffs, self.prec - 1)
    }

    fn dense(&self, lo: i64, hi: i64) -> Vec<R> {
        (lo..hi)
            .map(|k| if k < self.val { R::zero() } else { self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(R::zero) })
            .collect()
    }

    fn bounded_terms(&self) -> Result<usize, SeriesError> {
        let n = self.relative_precision();
        if n > MAX_INTERNAL_TERMS {
            return Err(SeriesError::UnboundedPrecision);
        }
        Ok(n as usize)
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let lead = self.coeffs.first().ok_or(SeriesError::ZeroSeries)?;
        let inv0 = lead.try_inv().ok_or(SeriesError::NotInvertible)?;
        let n = self.bounded_terms()?;
        let c = self.dense(self.val, self.val + n as i64);
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + &(c[j].clone() * &out[k - j]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(self.with_same_var(-self.val, out, -self.val + n as i64))
    }

    /// Square root whose leading coefficient is `root`, which must square to the leading coefficient.
    pub fn sqrt_with_root(&self, root: &R) -> Result<Self, SeriesError> {
        let lead = self.coeffs.first().ok_or(SeriesError::ZeroSeries)?;
        if self.val % 2 != 0 {
            return Err(SeriesError::OddValuation(self.val));
        }
        if root.square() != *lead {
            return Err(SeriesError::NonSquareLeading);
        }
        let two_root = root.clone() + root;
        let n = self.bounded_terms()?;
        let c = self.dense(self.val, self.val + n as i64);
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(root.clone());
        for k in 1..n {
            let mut acc = c[k].clone();
            for j in 1..k {
                acc = acc - &(out[j].clone() * &out[k - j]);
            }
            out.push(acc.try_div(&two_root).ok_or(SeriesError::NotInvertible)?);
        }
        Ok(self.with_same_var(self.val / 2, out, self.val / 2 + n as i64))
    }

    /// Square root with the leading coefficient's root taken in the coefficient ring.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let lead = self.coeffs.first().ok_or(SeriesError::ZeroSeries)?;
        if self.val % 2 != 0 {
            return Err(SeriesError::OddValuation(self.val));
        }
        let root = if lead.is_one() { R::one() } else { lead.try_sqrt().ok_or(SeriesError::NonSquareLeading)? };
        self.sqrt_with_root(&root)
    }

    pub fn pow(&self, n: i64) -> Result<Self, SeriesError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::constant(&self.var, R::one(), EXACT);
        for _ in 0..n.unsigned_abs() {
            acc = acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `inner` (positive valuation) for the parameter.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let m = inner.valuation().ok_or(SeriesError::ZeroSeries)?;
        if m < 1 {
            return Err(SeriesError::NonPositiveValuation(m));
        }
        let mut prec = if self.prec >= 0 { self.prec.saturating_mul(m) } else { EXACT };
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.val + i as i64;
            if k != 0 && !c.is_zero() {
                prec = prec.min((k - 1) * m + inner.prec);
            }
        }
        let inner = inner.truncate(prec.max(m));
        let mut acc = Self::zero(&inner.var, prec);
        let mut power = inner.pow(self.val)?;
        for c in &self.coeffs {
            if power.val >= prec {
                break;
            }
            if !c.is_zero() {
                acc = acc + &power.scale(c);
            }
            power = (power * &inner).truncate(prec);
        }
        Ok(acc.truncate(prec))
    }

    /// Compositional inverse of a series `g = g1 t + ...` with `g1` a unit.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        if self.valuation() != Some(1) {
            return Err(SeriesError::NotReversible);
        }
        let g1 = self.coeffs[0].clone();
        let inv1 = g1.try_inv().ok_or(SeriesError::NotInvertible)?;
        let prec = self.prec;
        let s = Self::param(&self.var, prec);
        let mut h = s.scale(&inv1);
        for _ in 1..prec {
            let err = self.compose(&h)? - &s;
            h = (h - &err.scale(&inv1)).truncate(prec);
        }
        Ok(h)
    }

    /// Evaluates a polynomial at this series by Horner's rule.
    pub fn eval_upoly(&self, p: &UPoly<R>) -> Self {
        let mut acc = Self::zero(&self.var, EXACT);
        for c in p.coeffs().iter().rev() {
            acc = acc * self + &Self::constant(&self.var, c.clone(), EXACT);
        }
        acc
    }
}

impl<R: Ring> PartialEq for LaurentSeries<R> {
    fn eq(&self, o: &Self) -> bool {
        self.prec == o.prec && self.val == o.val && self.coeffs == o.coeffs
    }
}

impl<R: Ring> Add<&LaurentSeries<R>> for LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn add(self, o: &LaurentSeries<R>) -> LaurentSeries<R> {
        let prec = self.prec.min(o.prec);
        let lo = self.val.min(o.val).min(prec);
        let end = |s: &LaurentSeries<R>| if s.coeffs.is_empty() { i64::MIN } else { s.val + s.coeffs.len() as i64 };
        let hi = prec.min(end(&self).max(end(o))).max(lo);
        let a = self.dense(lo, hi);
        let b = o.dense(lo, hi);
        let v = a.into_iter().zip(b).map(|(x, y)| x + &y).collect();
        self.with_same_var(lo, v, prec)
    }
}

impl<R: Ring> Sub<&LaurentSeries<R>> for LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn sub(self, o: &LaurentSeries<R>) -> LaurentSeries<R> {
        self + &(-o.clone())
    }
}

impl<R: Ring> Mul<&LaurentSeries<R>> for LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn mul(self, o: &LaurentSeries<R>) -> LaurentSeries<R> {
        let val = self.val + o.val;
        let prec = (self.val + o.prec).min(o.val + self.prec);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return self.with_same_var(prec, vec![], prec);
        }
        let n = ((prec - val).max(0) as usize).min(self.coeffs.len() + o.coeffs.len() - 1);
        let mut v = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                v[i + j] = v[i + j].clone() + &(a.clone() * b);
            }
        }
        self.with_same_var(val, v, prec)
    }
}

impl<R: Ring> Neg for LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn neg(self) -> LaurentSeries<R> {
        LaurentSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), ..self }
    }
}

macro_rules! owned_rhs {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for LaurentSeries<R> {
            type Output = LaurentSeries<R>;
            fn $m(self, o: LaurentSeries<R>) -> LaurentSeries<R> {
                $tr::$m(self, &o)
            }
        }
    };
}

owned_rhs!(Add, add);
owned_rhs!(Sub, sub);
owned_rhs!(Mul, mul);

impl<R: Ring> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.val + i as i64;
            let neg = c.is_negative_display();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let body = if mag.needs_parens() { format!("({mag})") } else { mag.to_string() };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{body}*")?;
                    }
                    if k == 1 { write!(f, "{}", self.var)? } else { write!(f, "{}^{}", self.var, k)? }
                }
            }
        }
        if self.prec >= EXACT / 2 {
            return if first { write!(f, "0") } else { Ok(()) };
        }
        if !first {
            write!(f, " + ")?;
        }
        if self.prec == 1 {
            write!(f, "O({})", self.var)
        } else if self.prec == 0 {
            write!(f, "O(1)")
        } else {
            write!(f, "O({}^{})", self.var, self.prec)
        }
    }
}
