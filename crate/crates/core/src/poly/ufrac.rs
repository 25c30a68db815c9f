use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalars::{Field, Rational, Ring};

use super::{MultiPoly, PolyError, UPoly};

/// Reduced quotient of univariate polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct URatFunc<K> {
    num: UPoly<K>,
    den: UPoly<K>,
}

impl<K: Field> URatFunc<K> {
    pub fn new(num: UPoly<K>, den: UPoly<K>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: UPoly<K>) -> Self {
        URatFunc { num: p, den: UPoly::constant(K::one()) }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    fn reduced(num: UPoly<K>, den: UPoly<K>) -> Self {
        if num.is_zero() {
            return URatFunc { num, den: UPoly::constant(K::one()) };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let inv = den.lc().inv();
        URatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn numer(&self) -> &UPoly<K> {
        &self.num
    }

    pub fn denom(&self) -> &UPoly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Degree of the numerator minus degree of the denominator.
    pub fn degree(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.num.deg_i() - self.den.deg_i())
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * &self.den - &(self.num.clone() * &self.den.derivative());
        Self::reduced(n, self.den.clone() * &self.den)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::reduced(self.num.scale(k), self.den.clone())
    }

    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() { None } else { Some(self.num.eval(x) / d) }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> URatFunc<L> {
        URatFunc::reduced(self.num.map(&f), self.den.map(&f))
    }

    /// Exact square root, if one exists with coefficients in the field.
    pub fn sqrt(&self) -> Option<Self> {
        Some(Self::reduced(poly_sqrt(&self.num)?, poly_sqrt(&self.den)?))
    }

    /// Multivariate view in the variable `var`.
    pub fn to_multi(&self, var: &str) -> (MultiPoly<K>, MultiPoly<K>) {
        (MultiPoly::from_dense(&self.num, var), MultiPoly::from_dense(&self.den, var))
    }
}

/// Square root of a polynomial via its square-free decomposition.
pub fn poly_sqrt<K: Field>(p: &UPoly<K>) -> Option<UPoly<K>> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let (lc, parts) = p.squarefree_decomposition();
    let mut root = UPoly::constant(lc.try_sqrt()?);
    for (i, part) in parts.iter().enumerate() {
        let mult = i + 1;
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        if mult % 2 == 1 {
            return None;
        }
        root = root * &part.pow((mult / 2) as u32);
    }
    Some(root)
}

impl<K: Field> fmt::Display for URatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() && self.den.lc().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<K: Field> Add<&URatFunc<K>> for URatFunc<K> {
    type Output = URatFunc<K>;
    fn add(self, o: &URatFunc<K>) -> URatFunc<K> {
        if self.den == o.den {
            return URatFunc::reduced(self.num + &o.num, self.den);
        }
        let n = self.num * &o.den + &(o.num.clone() * &self.den);
        URatFunc::reduced(n, self.den * &o.den)
    }
}

impl<K: Field> Sub<&URatFunc<K>> for URatFunc<K> {
    type Output = URatFunc<K>;
    fn sub(self, o: &URatFunc<K>) -> URatFunc<K> {
        self + &(-o.clone())
    }
}

impl<K: Field> Mul<&URatFunc<K>> for URatFunc<K> {
    type Output = URatFunc<K>;
    fn mul(self, o: &URatFunc<K>) -> URatFunc<K> {
        URatFunc::reduced(self.num * &o.num, self.den * &o.den)
    }
}

impl<K: Field> Div<&URatFunc<K>> for URatFunc<K> {
    type Output = URatFunc<K>;
    fn div(self, o: &URatFunc<K>) -> URatFunc<K> {
        assert!(!o.num.is_zero(), "rational function division by zero");
        URatFunc::reduced(self.num * &o.den, self.den * &o.num)
    }
}

macro_rules! owned_rhs {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for URatFunc<K> {
            type Output = URatFunc<K>;
            fn $m(self, o: URatFunc<K>) -> URatFunc<K> {
                $tr::$m(self, &o)
            }
        }
    };
}

owned_rhs!(Add, add);
owned_rhs!(Sub, sub);
owned_rhs!(Mul, mul);
owned_rhs!(Div, div);

impl<K: Field> Neg for URatFunc<K> {
    type Output = URatFunc<K>;
    fn neg(self) -> URatFunc<K> {
        URatFunc { num: -self.num, den: self.den }
    }
}

impl<K: Field> Ring for URatFunc<K> {
    fn zero() -> Self {
        URatFunc::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        URatFunc::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        URatFunc::constant(K::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| URatFunc::reduced(self.den.clone(), self.num.clone()))
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        (!o.num.is_zero()).then(|| self.clone() / o)
    }
    fn try_sqrt(&self) -> Option<Self> {
        self.sqrt()
    }
    fn needs_parens(&self) -> bool {
        true
    }
}

impl<K: Field> Field for URatFunc<K> {}
