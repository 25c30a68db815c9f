use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{Field, Ring};

use super::PolyError;

/// Dense univariate polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: R) -> Self {
        UPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UPoly::new(vec![R::zero(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, k: &R) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| c.clone() * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &R::from_i64(k as i64))
                .collect(),
        )
    }

    /// `p(x + c)`.
    pub fn taylor_shift(&self, c: &R) -> Self {
        let mut acc = UPoly::zero();
        let lin = UPoly::new(vec![c.clone(), R::one()]);
        for k in self.coeffs.iter().rev() {
            acc = acc * &lin + &UPoly::constant(k.clone());
        }
        acc
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UPoly::zero();
        for k in self.coeffs.iter().rev() {
            acc = acc * inner + &UPoly::constant(k.clone());
        }
        acc
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UPoly::constant(R::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Divides every coefficient exactly by `k`.
    pub fn exact_div_scalar(&self, k: &R) -> Result<Self, PolyError> {
        self.coeffs
            .iter()
            .map(|c| c.try_div(k).ok_or(PolyError::NotDivisible))
            .collect::<Result<Vec<_>, _>>()
            .map(UPoly::new)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self, PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(da) = self.degree() else { return Ok(self.clone()) };
        if da < db {
            return Ok(self.clone());
        }
        let lb = b.lc();
        let mut r = self.clone();
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = UPoly::constant(r.lc()).shift(dr - db);
            r = r.scale(&lb) - &(t * b);
            e -= 1;
        }
        Ok(r.scale(&lb.pow(e as u32)))
    }
}

impl<K: Field> UPoly<K> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let inv = b.lc().inv();
        let mut r = self.clone();
        let mut q = vec![K::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let k = r.lc() * &inv;
            q[dr - db] = k.clone();
            r = r - &(UPoly::constant(k).shift(dr - db) * b);
        }
        Ok((UPoly::new(q), r))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, b: &Self) -> Self {
        if self.is_zero() {
            return b.monic();
        }
        let (mut a, mut b) = (self.monic(), b.clone());
        while !b.is_zero() {
            b = b.monic();
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(&self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (UPoly::constant(K::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(K::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - &(q.clone() * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - &(q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, when they are coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.xgcd(m);
        if g.degree() == Some(0) { Some(s.div_rem(m).ok()?.1) } else { None }
    }

    pub fn rem(&self, m: &Self) -> Self {
        self.div_rem(m).expect("nonzero modulus").1
    }

    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(b).ok()?;
        if r.is_zero() { Some(q) } else { None }
    }

    /// Square-free decomposition `lc * prod f_i^i` (Yun), returned as `(lc, [f_1, f_2, ...])`.
    pub fn squarefree_decomposition(&self) -> (K, Vec<Self>) {
        let lc = self.lc();
        let mut parts = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return (lc, parts);
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides derivative");
        let mut d = c - &b.derivative();
        loop {
            let g = b.gcd(&d);
            parts.push(g.clone());
            b = b.exact_div(&g).expect("gcd divides");
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&g).expect("gcd divides");
            d = c - &b.derivative();
        }
        while parts.last().is_some_and(|p| p.degree() == Some(0)) {
            parts.pop();
        }
        (lc, parts)
    }
}

impl<R: Ring> Add<&UPoly<R>> for UPoly<R> {
    type Output = UPoly<R>;
    fn add(self, o: &UPoly<R>) -> UPoly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = self.coeffs;
        v.resize(n, R::zero());
        for (i, c) in o.coeffs.iter().enumerate() {
            v[i] = v[i].clone() + c;
        }
        UPoly::new(v)
    }
}

impl<R: Ring> Sub<&UPoly<R>> for UPoly<R> {
    type Output = UPoly<R>;
    fn sub(self, o: &UPoly<R>) -> UPoly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = self.coeffs;
        v.resize(n, R::zero());
        for (i, c) in o.coeffs.iter().enumerate() {
            v[i] = v[i].clone() - c;
        }
        UPoly::new(v)
    }
}

impl<R: Ring> Mul<&UPoly<R>> for UPoly<R> {
    type Output = UPoly<R>;
    fn mul(self, o: &UPoly<R>) -> UPoly<R> {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + &(a.clone() * b);
            }
        }
        UPoly::new(v)
    }
}

impl<R: Ring> Add for UPoly<R> {
    type Output = UPoly<R>;
    fn add(self, o: UPoly<R>) -> UPoly<R> {
        self + &o
    }
}

impl<R: Ring> Sub for UPoly<R> {
    type Output = UPoly<R>;
    fn sub(self, o: UPoly<R>) -> UPoly<R> {
        self - &o
    }
}

impl<R: Ring> Mul for UPoly<R> {
    type Output = UPoly<R>;
    fn mul(self, o: UPoly<R>) -> UPoly<R> {
        self * &o
    }
}

impl<R: Ring> Neg for UPoly<R> {
    type Output = UPoly<R>;
    fn neg(self) -> UPoly<R> {
        UPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> fmt::Display for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = super::MultiPoly::from_dense(self, "x");
        write!(f, "{p}")
    }
}
