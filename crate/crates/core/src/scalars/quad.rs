use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::bigfloat::BigFloat;
use super::rational::rational_sqrt_exact;
use super::{Field, Rational, Ring, ScalarError};

/// Element `rat + surd*sqrt(d)` of a real quadratic field.
///
/// The radicand travels with the value. Values with zero surd part may leave
/// it unset and then adopt the radicand of whatever they are combined with.
/// The std operators panic on mismatched radicands; the `quad_*` functions
/// report the mismatch instead.
#[derive(Clone, Debug)]
pub struct QuadExt {
    rat: Rational,
    surd: Rational,
    d: Option<u64>,
}

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn merge_tags(a: &QuadExt, b: &QuadExt) -> Result<Option<u64>, ScalarError> {
    match (a.d, b.d) {
        (Some(x), Some(y)) if x != y => Err(ScalarError::MismatchedField { left: x, right: y }),
        (Some(x), _) | (None, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

impl QuadExt {
    pub fn new(rat: Rational, surd: Rational, d: u64) -> Result<Self, ScalarError> {
        if !is_square_free(d) {
            return Err(ScalarError::NotSquareFree(d));
        }
        Ok(QuadExt { rat, surd, d: Some(d) })
    }

    /// An untagged rational value.
    pub fn rational(r: Rational) -> Self {
        QuadExt { rat: r, surd: Rational::zero(), d: None }
    }

    /// The generator `sqrt(d)`.
    pub fn sqrt_of(d: u64) -> Result<Self, ScalarError> {
        Self::new(Rational::zero(), Rational::from_integer(1.into()), d)
    }

    pub fn rat_part(&self) -> &Rational {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> Option<u64> {
        self.d
    }

    /// Tags a rational value with a radicand; a no-op when already tagged alike.
    pub fn with_radicand(mut self, d: u64) -> Result<Self, ScalarError> {
        match self.d {
            Some(x) if x != d => Err(ScalarError::MismatchedField { left: x, right: d }),
            _ => {
                if !is_square_free(d) {
                    return Err(ScalarError::NotSquareFree(d));
                }
                self.d = Some(d);
                Ok(self)
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt { rat: self.rat.clone(), surd: -self.surd.clone(), d: self.d }
    }

    fn d_rat(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.d.unwrap_or(0)))
    }

    /// Field norm `rat^2 - d*surd^2`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - self.d_rat() * &self.surd * &self.surd
    }

    pub fn trace(&self) -> Rational {
        &self.rat * Rational::from_integer(2.into())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ScalarError> {
        let d = merge_tags(self, o)?;
        Ok(QuadExt { rat: &self.rat + &o.rat, surd: &self.surd + &o.surd, d })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, ScalarError> {
        let d = merge_tags(self, o)?;
        Ok(QuadExt { rat: &self.rat - &o.rat, surd: &self.surd - &o.surd, d })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        let d = merge_tags(self, o)?;
        let dr = Rational::from_integer(BigInt::from(d.unwrap_or(0)));
        Ok(QuadExt {
            rat: &self.rat * &o.rat + dr * &self.surd * &o.surd,
            surd: &self.rat * &o.surd + &self.surd * &o.rat,
            d,
        })
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QuadExt { rat: &self.rat / &n, surd: -(&self.surd / &n), d: self.d })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&o.checked_inv()?)
    }

    /// Exact square root inside the same field, if it exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.surd.is_zero() {
            if let Some(s) = rational_sqrt_exact(&self.rat) {
                return Some(QuadExt { rat: s, surd: Rational::zero(), d: self.d });
            }
            let d = self.d?;
            let s = rational_sqrt_exact(&(&self.rat / self.d_rat()))?;
            return Some(QuadExt { rat: Rational::zero(), surd: s, d: Some(d) });
        }
        let n = rational_sqrt_exact(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for cand in [(&self.rat + &n) / &two, (&self.rat - &n) / &two] {
            if let Some(x) = rational_sqrt_exact(&cand) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.surd / (&two * &x);
                return Some(QuadExt { rat: x, surd: y, d: self.d });
            }
        }
        None
    }

    /// Numeric value at the requested binary precision.
    pub fn to_bigfloat(&self, prec: u32) -> BigFloat {
        let r = BigFloat::from_rational(&self.rat, prec);
        if self.surd.is_zero() {
            return r;
        }
        let root = BigFloat::from_rational(&self.d_rat(), prec).sqrt();
        r + BigFloat::from_rational(&self.surd, prec) * &root
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.rat == o.rat && self.surd == o.surd && (self.surd.is_zero() || self.d == o.d)
    }
}

impl Eq for QuadExt {}

/// Field multiplication in Q(sqrt(d)); fails on mismatched radicands.
pub fn quad_mul(z: &QuadExt, w: &QuadExt) -> Result<QuadExt, ScalarError> {
    z.checked_mul(w)
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d.unwrap_or(0);
        let surd_text = |s: &Rational| {
            if s.abs() == Rational::from_integer(1.into()) {
                format!("sqrt({d})")
            } else {
                format!("{}*sqrt({d})", fmt_rational(&s.abs()))
            }
        };
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.rat)),
            (true, false) => {
                let sign = if self.surd.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", surd_text(&self.surd))
            }
            (false, false) => {
                let sign = if self.surd.is_negative() { "-" } else { "+" };
                write!(f, "{} {sign} {}", fmt_rational(&self.rat), surd_text(&self.surd))
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                self.$checked(&o).expect("quadratic field mismatch")
            }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &'a QuadExt) -> QuadExt {
                self.$checked(o).expect("quadratic field mismatch")
            }
        }
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &'a QuadExt) -> QuadExt {
                self.$checked(o).expect("quadratic field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { rat: -self.rat, surd: -self.surd, d: self.d }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }
    fn try_sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn is_negative_display(&self) -> bool {
        if self.rat.is_zero() { self.surd.is_negative() } else { self.rat.is_negative() }
    }
    fn needs_parens(&self) -> bool {
        !self.rat.is_zero() && !self.surd.is_zero()
    }
}

impl Field for QuadExt {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn q(a: i64, b: i64, d: u64) -> QuadExt {
        QuadExt::new(rat(a, 1), rat(b, 1), d).unwrap()
    }

    #[test]
    fn gamma_squared() {
        let g = q(0, 45, 105);
        assert_eq!(quad_mul(&g, &g).unwrap(), QuadExt::rational(rat(212625, 1)));
    }

    #[test]
    fn generator_times_conjugate() {
        let s = q(0, 1, 105);
        let p = quad_mul(&s, &s.conj()).unwrap();
        assert_eq!(p, QuadExt::rational(rat(-105, 1)));
        assert_eq!(s.norm(), rat(-105, 1));
    }

    #[test]
    fn mismatched_radicands_error() {
        assert!(matches!(
            quad_mul(&q(1, 1, 2), &q(1, 1, 5)),
            Err(ScalarError::MismatchedField { left: 2, right: 5 })
        ));
        assert!(QuadExt::new(rat(1, 1), rat(1, 1), 12).is_err());
    }

    #[test]
    fn float_evaluation_matches_exact() {
        let g = q(0, 45, 105);
        let z = g.clone() * QuadExt::from_i64(39) + QuadExt::from_i64(17983);
        assert_eq!(z, q(17983, 1755, 105));
        let exact = z.to_bigfloat(128);
        let via_float = BigFloat::from_i64(17983)
            + BigFloat::from_i64(1755) * BigFloat::from_rational(&rat(105, 1), 128).sqrt();
        assert!((exact.clone() - via_float).abs() < BigFloat::from_rational(&rat(1, 1 << 40), 128));
        assert!((exact.to_f64() - 35966.398595).abs() < 1e-5);
    }

    #[test]
    fn square_roots_in_field() {
        assert_eq!(QuadExt::from_i64(420).with_radicand(105).unwrap().sqrt_exact(), Some(q(0, 2, 105)));
        let z = q(3, 2, 2);
        let sq = z.clone() * &z;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == z || r == -z);
        assert_eq!(q(0, 1, 105).sqrt_exact(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(0, 45, 105).to_string(), "45*sqrt(105)");
        assert_eq!(QuadExt::new(rat(1, 2), rat(-1, 3), 5).unwrap().to_string(), "1/2 - 1/3*sqrt(5)");
        assert_eq!(QuadExt::from_i64(-7).to_string(), "-7");
    }
}
