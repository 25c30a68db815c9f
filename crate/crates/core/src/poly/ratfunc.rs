use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalars::{Field, Rational, Ring};

use super::gcd::{normalize, poly_gcd};
use super::{MultiPoly, PolyError};

/// Quotient of polynomials, kept reduced with a denominator of leading coefficient one.
#[derive(Clone, Debug)]
pub struct RatFunc<K> {
    num: MultiPoly<K>,
    den: MultiPoly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: MultiPoly<K>, den: MultiPoly<K>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: MultiPoly<K>) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    fn reduced(num: MultiPoly<K>, den: MultiPoly<K>) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: MultiPoly::one() };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_divide(&g).ok().flatten().expect("gcd divides numerator"),
                    den.exact_divide(&g).ok().flatten().expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coeff().inv();
        RatFunc { num: num.scale(&lc), den: normalize(&den) }
    }

    pub fn numer(&self) -> &MultiPoly<K> {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn derivative(&self, var: &str) -> Self {
        let n = self.num.derivative(var) * &self.den - self.num.clone() * &self.den.derivative(var);
        Self::reduced(n, self.den.clone() * &self.den)
    }

    pub fn substitute(&self, var: &str, value: &MultiPoly<K>) -> Result<Self, PolyError> {
        RatFunc::new(self.num.substitute(var, value), self.den.substitute(var, value))
    }

    pub fn map_field<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> RatFunc<L> {
        RatFunc::reduced(self.num.map_coeffs(f), self.den.map_coeffs(f))
    }
}

impl<K: Field> PartialEq for RatFunc<K> {
    fn eq(&self, o: &Self) -> bool {
        self.num.clone() * &o.den == o.num.clone() * &self.den
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<K: Field> Add<&RatFunc<K>> for RatFunc<K> {
    type Output = RatFunc<K>;
    fn add(self, o: &RatFunc<K>) -> RatFunc<K> {
        if self.den == o.den {
            return RatFunc::reduced(self.num + &o.num, self.den);
        }
        let n = self.num * &o.den + &(o.num.clone() * &self.den);
        RatFunc::reduced(n, self.den * &o.den)
    }
}

impl<K: Field> Sub<&RatFunc<K>> for RatFunc<K> {
    type Output = RatFunc<K>;
    fn sub(self, o: &RatFunc<K>) -> RatFunc<K> {
        self + &(-o.clone())
    }
}

impl<K: Field> Mul<&RatFunc<K>> for RatFunc<K> {
    type Output = RatFunc<K>;
    fn mul(self, o: &RatFunc<K>) -> RatFunc<K> {
        RatFunc::reduced(self.num * &o.num, self.den * &o.den)
    }
}

impl<K: Field> Div<&RatFunc<K>> for RatFunc<K> {
    type Output = RatFunc<K>;
    fn div(self, o: &RatFunc<K>) -> RatFunc<K> {
        assert!(!o.num.is_zero(), "rational function division by zero");
        RatFunc::reduced(self.num * &o.den, self.den * &o.num)
    }
}

macro_rules! owned_rhs {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for RatFunc<K> {
            type Output = RatFunc<K>;
            fn $m(self, o: RatFunc<K>) -> RatFunc<K> {
                $tr::$m(self, &o)
            }
        }
    };
}

owned_rhs!(Add, add);
owned_rhs!(Sub, sub);
owned_rhs!(Mul, mul);
owned_rhs!(Div, div);

impl<K: Field> Neg for RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<K: Field> Ring for RatFunc<K> {
    fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: MultiPoly::one(), den: MultiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(MultiPoly::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() { None } else { Some(RatFunc::reduced(self.den.clone(), self.num.clone())) }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.num.is_zero() { None } else { Some(self.clone() / o) }
    }
    fn try_sqrt(&self) -> Option<Self> {
        Some(RatFunc { num: self.num.try_sqrt()?, den: self.den.try_sqrt()? })
    }
    fn is_negative_display(&self) -> bool {
        self.num.is_negative_display()
    }
    fn needs_parens(&self) -> bool {
        !self.den.is_one() || self.num.needs_parens()
    }
}

impl<K: Field> Field for RatFunc<K> {}
