use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Rational, Ring};

/// Working precision (binary digits) used when none is requested.
pub const DEFAULT_PRECISION: u32 = 128;

/// Binary floating-point number `mant * 2^exp` with per-value precision.
///
/// A precision of zero marks an exact dyadic value (such as the ring
/// identities). Results take the larger precision of their operands and are
/// rounded to nearest, ties to even.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn strip(mut mant: BigInt, mut exp: i64) -> (BigInt, i64) {
    if mant.is_zero() {
        return (mant, 0);
    }
    let tz = mant.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        mant >>= tz;
        exp += tz as i64;
    }
    (mant, exp)
}

/// Rounds `mant * 2^exp` to `prec` bits; `sticky` records a nonzero tail
/// strictly below the least significant bit of `mant`.
fn round(mant: BigInt, exp: i64, prec: u32, sticky: bool) -> (BigInt, i64) {
    if prec == 0 || mant.is_zero() {
        return strip(mant, exp);
    }
    let neg = mant.is_negative();
    let mag = mant.magnitude().clone();
    let bits = mag.bits();
    if bits <= prec as u64 {
        let m = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, mag);
        return strip(m, exp);
    }
    let shift = bits - prec as u64;
    let mut q = &mag >> shift;
    let rem = &mag - (&q << shift);
    let half = num_bigint::BigUint::one() << (shift - 1);
    let up = match rem.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => sticky || q.is_odd(),
    };
    if up {
        q += 1u32;
    }
    let m = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
    strip(m, exp + shift as i64)
}

impl BigFloat {
    fn make(mant: BigInt, exp: i64, prec: u32, sticky: bool) -> Self {
        let (mant, exp) = round(mant, exp, prec, sticky);
        BigFloat { mant, exp, prec }
    }

    pub fn zero_with(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn from_i64(n: i64) -> Self {
        let (mant, exp) = strip(BigInt::from(n), 0);
        BigFloat { mant, exp, prec: 0 }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::make(n.clone(), 0, prec, false)
    }

    /// Correctly rounded conversion of a rational at `prec` bits.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let prec = prec.max(2);
        let (n, d) = (r.numer(), r.denom());
        if n.is_zero() {
            return Self::zero_with(prec);
        }
        let k = (prec as i64 + 2 + d.bits() as i64 - n.magnitude().bits() as i64).max(0) + 1;
        let scaled = n << (k as usize);
        let (q, rem) = scaled.div_rem(d);
        Self::make(q, -k, prec, !rem.is_zero())
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Same value re-rounded at another precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        Self::make(self.mant.clone(), self.exp, prec, false)
    }

    fn working(a: &Self, b: &Self) -> u32 {
        a.prec.max(b.prec)
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Position just above the most significant bit (`|x| < 2^top`).
    pub fn top(&self) -> i64 {
        self.exp + self.mant.magnitude().bits() as i64
    }

    /// `2^k` as an exact value.
    pub fn pow2(k: i64) -> Self {
        BigFloat { mant: BigInt::one(), exp: k, prec: 0 }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative float");
        let prec = if self.prec == 0 { DEFAULT_PRECISION } else { self.prec };
        if self.mant.is_zero() {
            return Self::zero_with(prec);
        }
        let want = 2 * (prec as i64 + 2);
        let mut k = (want - self.mant.bits() as i64).max(0);
        if (self.exp - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let n = &self.mant << (k as usize);
        let s = n.sqrt();
        let sticky = &s * &s != n;
        Self::make(s, (self.exp - k) / 2, prec, sticky)
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mant >> (shift as usize)).to_f64().unwrap_or(0.0);
        m * 2f64.powi((self.exp + shift).clamp(-2000, 2000) as i32)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << (self.exp as usize))
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as usize))
        }
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let r = self.to_rational();
        let neg = r.is_negative();
        let r = r.abs();
        let mut e = ((self.top() as f64 - 1.0) * std::f64::consts::LOG10_2).floor() as i64;
        let ten = BigInt::from(10);
        let scaled = |e: i64| -> BigInt {
            let p = digits as i64 - 1 - e;
            let v = if p >= 0 {
                &r * Rational::from_integer(ten.pow(p as u32))
            } else {
                &r / Rational::from_integer(ten.pow((-p) as u32))
            };
            v.round().to_integer()
        };
        let mut n = scaled(e);
        let limit = ten.pow(digits as u32);
        while n >= limit {
            e += 1;
            n = scaled(e);
        }
        while n < ten.pow(digits as u32 - 1) {
            e -= 1;
            n = scaled(e);
        }
        let s = n.to_string();
        let sign = if neg { "-" } else { "" };
        if (-6..21).contains(&e) {
            if e >= 0 {
                let int_len = (e + 1) as usize;
                if int_len >= s.len() {
                    format!("{sign}{}{}", s, "0".repeat(int_len - s.len()))
                } else {
                    format!("{sign}{}.{}", &s[..int_len], &s[int_len..])
                }
            } else {
                format!("{sign}0.{}{}", "0".repeat((-e - 1) as usize), s)
            }
        } else {
            let tail = if s.len() > 1 { format!(".{}", &s[1..]) } else { String::new() };
            format!("{sign}{}{}e{}", &s[..1], tail, e)
        }
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, o: &Self) -> bool {
        self.mant == o.mant && self.exp == o.exp
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        let diff = self.clone() - o;
        Some(if diff.mant.is_zero() {
            Ordering::Equal
        } else if diff.mant.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        })
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.prec == 0 { DEFAULT_PRECISION } else { self.prec };
        let digits = ((p as f64) * std::f64::consts::LOG10_2).floor() as usize;
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

fn add_impl(a: &BigFloat, b: &BigFloat) -> BigFloat {
    let prec = BigFloat::working(a, b);
    if a.mant.is_zero() {
        return BigFloat::make(b.mant.clone(), b.exp, prec, false);
    }
    if b.mant.is_zero() {
        return BigFloat::make(a.mant.clone(), a.exp, prec, false);
    }
    let (hi, lo) = if a.top() >= b.top() { (a, b) } else { (b, a) };
    let gap = hi.top() - lo.top();
    let lo_eff;
    let lo = if prec > 0 && gap > prec as i64 + 4 {
        // Far below the rounding position, the smaller operand only acts as a sticky bit.
        let e = hi.top().min(hi.exp) - prec as i64 - 8;
        let e = e.min(hi.exp - 2);
        lo_eff = BigFloat { mant: lo.mant.signum(), exp: e, prec: 0 };
        &lo_eff
    } else {
        lo
    };
    let e = hi.exp.min(lo.exp);
    let m = (&hi.mant << ((hi.exp - e) as usize)) + (&lo.mant << ((lo.exp - e) as usize));
    BigFloat::make(m, e, prec, false)
}

impl Add<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn add(self, o: &BigFloat) -> BigFloat {
        add_impl(&self, o)
    }
}

impl Add for BigFloat {
    type Output = BigFloat;
    fn add(self, o: BigFloat) -> BigFloat {
        add_impl(&self, &o)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -self.mant, exp: self.exp, prec: self.prec }
    }
}

impl Sub<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn sub(self, o: &BigFloat) -> BigFloat {
        add_impl(&self, &(-o.clone()))
    }
}

impl Sub for BigFloat {
    type Output = BigFloat;
    fn sub(self, o: BigFloat) -> BigFloat {
        add_impl(&self, &(-o))
    }
}

impl Mul<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn mul(self, o: &BigFloat) -> BigFloat {
        let prec = BigFloat::working(&self, o);
        BigFloat::make(&self.mant * &o.mant, self.exp + o.exp, prec, false)
    }
}

impl Mul for BigFloat {
    type Output = BigFloat;
    fn mul(self, o: BigFloat) -> BigFloat {
        self * &o
    }
}

impl Div<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn div(self, o: &BigFloat) -> BigFloat {
        assert!(!o.mant.is_zero(), "float division by zero");
        let prec = match BigFloat::working(&self, o) {
            0 => DEFAULT_PRECISION,
            p => p,
        };
        if self.mant.is_zero() {
            return BigFloat::zero_with(prec);
        }
        let k = (prec as i64 + 2 + o.mant.bits() as i64 - self.mant.bits() as i64).max(0) + 1;
        let n = &self.mant << (k as usize);
        let (q, r) = n.div_rem(&o.mant);
        BigFloat::make(q, self.exp - o.exp - k, prec, !r.is_zero())
    }
}

impl Div for BigFloat {
    type Output = BigFloat;
    fn div(self, o: BigFloat) -> BigFloat {
        self / &o
    }
}

impl Ring for BigFloat {
    fn zero() -> Self {
        BigFloat::from_i64(0)
    }
    fn one() -> Self {
        BigFloat::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        let d = r.denom();
        if d.magnitude().count_ones() == 1 {
            let (mant, exp) = strip(r.numer().clone(), -(d.bits() as i64 - 1));
            BigFloat { mant, exp, prec: 0 }
        } else {
            BigFloat::from_rational(r, DEFAULT_PRECISION)
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.mant.is_zero() { None } else { Some(BigFloat::one() / self) }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.mant.is_zero() { None } else { Some(self.clone() / o) }
    }
    fn try_sqrt(&self) -> Option<Self> {
        if self.is_negative() { None } else { Some(self.sqrt()) }
    }
    fn is_negative_display(&self) -> bool {
        self.is_negative()
    }
}

impl Field for BigFloat {}

/// Converts a rational to a float, rejecting precisions below double.
pub fn rational_to_float(r: &Rational, prec: u32) -> Result<BigFloat, super::ScalarError> {
    if prec < 53 {
        return Err(super::ScalarError::PrecisionTooLow(prec));
    }
    Ok(BigFloat::from_rational(r, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn conversions() {
        assert_eq!(rational_to_float(&rat(1, 2), 128).unwrap().to_decimal(5), "0.50000");
        assert_eq!(rational_to_float(&rat(25, 24), 128).unwrap().to_decimal(12), "1.04166666667");
        assert_eq!(rational_to_float(&rat(49, 1152), 128).unwrap().to_decimal(9), "0.0425347222");
        assert!(rational_to_float(&rat(1, 3), 40).is_err());
    }

    #[test]
    fn correctly_rounded_third() {
        let x = BigFloat::from_rational(&rat(1, 3), 64);
        let err = (x.to_rational() - rat(1, 3)).abs();
        let ulp = Rational::new(BigInt::one(), BigInt::one() << 66usize);
        assert!(err <= ulp);
    }

    #[test]
    fn sqrt_two_squared() {
        let s = BigFloat::from_rational(&rat(2, 1), 200).sqrt();
        let e = (s.clone() * &s - BigFloat::from_i64(2)).abs();
        assert!(e < BigFloat::pow2(-190));
    }

    #[test]
    fn tiny_addend_is_sticky() {
        let one = BigFloat::from_rational(&rat(1, 1), 64);
        let tiny = BigFloat::from_rational(&rat(1, 1), 64) * BigFloat::pow2(-500);
        assert_eq!(one.clone() + &tiny, one);
        assert_eq!(one.clone() - &tiny, one);
    }

    #[test]
    fn decimal_forms() {
        assert_eq!(BigFloat::from_i64(1315).to_decimal(6), "1315.00");
        assert_eq!(BigFloat::from_rational(&rat(-1, 1000000000), 64).to_decimal(3), "-1.00e-9");
    }
}
