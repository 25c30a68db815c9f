use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{BigFloat, Field, Rational, Ring};

/// Complex number with multiprecision float parts.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Complex { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        Complex { re, im: BigFloat::from_i64(0) }
    }

    pub fn from_rational_prec(r: &Rational, prec: u32) -> Self {
        Complex::real(BigFloat::from_rational(r, prec))
    }

    /// `exp(i*theta)` for `theta = 2*pi*k/n` plus a small offset, used only to seed root finders.
    pub fn unit_seed(k: usize, n: usize, prec: u32) -> Self {
        let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
        let re = BigFloat::from_rational(&f64_to_rational(t.cos()), prec);
        let im = BigFloat::from_rational(&f64_to_rational(t.sin()), prec);
        Complex { re, im }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        let two = BigFloat::from_i64(2);
        let a = ((r.clone() + &self.re) / &two).sqrt_clamped();
        let b = ((r - &self.re) / &two).sqrt_clamped();
        let b = if self.im.is_negative() { -b } else { b };
        Complex { re: a, im: b }
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        Complex { re: self.re.clone() * k, im: self.im.clone() * k }
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Complex { re: self.re.with_precision(prec), im: self.im.with_precision(prec) }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        let im = self.im.to_decimal(digits);
        if let Some(mag) = im.strip_prefix('-') {
            format!("{} - {}i", self.re.to_decimal(digits), mag)
        } else {
            format!("{} + {}i", self.re.to_decimal(digits), im)
        }
    }
}

impl BigFloat {
    fn sqrt_clamped(&self) -> BigFloat {
        if self.is_negative() { BigFloat::zero_with(self.precision()) } else { self.sqrt() }
    }
}

/// Exact rational value of an `f64`.
pub fn f64_to_rational(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_default()
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*i)", self.re, self.im)
    }
}

impl Add<&Complex> for Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex { re: self.re + &o.re, im: self.im + &o.im }
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        self + &o
    }
}

impl Sub<&Complex> for Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex { re: self.re - &o.re, im: self.im - &o.im }
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, o: Complex) -> Complex {
        self - &o
    }
}

impl Mul<&Complex> for Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re * &o.im + self.im * &o.re;
        Complex { re, im }
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        self * &o
    }
}

impl Div<&Complex> for Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        let n = o.norm_sqr();
        let p = self * &o.conj();
        Complex { re: p.re / &n, im: p.im / &n }
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, o: Complex) -> Complex {
        self / &o
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -self.re, im: -self.im }
    }
}

impl Ring for Complex {
    fn zero() -> Self {
        Complex::real(BigFloat::from_i64(0))
    }
    fn one() -> Self {
        Complex::real(BigFloat::from_i64(1))
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::real(<BigFloat as Ring>::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        if Ring::is_zero(self) { None } else { Some(Complex::one() / self) }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if Ring::is_zero(o) { None } else { Some(self.clone() / o) }
    }
    fn try_sqrt(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn needs_parens(&self) -> bool {
        true
    }
}

impl Field for Complex {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn sqrt_of_minus_four() {
        let z = Complex::from_rational_prec(&rat(-4, 1), 128);
        let s = z.sqrt();
        assert!(s.re.abs() < BigFloat::pow2(-100));
        assert!((s.im - BigFloat::from_i64(2)).abs() < BigFloat::pow2(-100));
    }

    #[test]
    fn division_round_trip() {
        let a = Complex::new(BigFloat::from_rational(&rat(3, 7), 128), BigFloat::from_rational(&rat(-2, 5), 128));
        let b = Complex::new(BigFloat::from_rational(&rat(1, 9), 128), BigFloat::from_rational(&rat(4, 3), 128));
        let back = (a.clone() / &b) * &b;
        assert!((back - &a).abs() < BigFloat::pow2(-110));
    }
}
