use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Ring, ScalarError};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an integer-valued rational.
pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Returns `s` with `s*s == n`, `None` when `n` is not a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Result<Option<BigInt>, ScalarError> {
    if n.is_negative() {
        return Err(ScalarError::NegativeSqrt);
    }
    let s = n.sqrt();
    Ok(if &s * &s == *n { Some(s) } else { None })
}

/// Square root of a rational if both numerator and denominator are squares.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = integer_sqrt_exact(r.numer()).ok()??;
    let d = integer_sqrt_exact(r.denom()).ok()??;
    Some(Rational::new(n, d))
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) { None } else { Some(self.recip()) }
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) { None } else { Some(self / other) }
    }
    fn try_sqrt(&self) -> Option<Self> {
        rational_sqrt_exact(self)
    }
    fn is_negative_display(&self) -> bool {
        self.numer().sign() == Sign::Minus
    }
}

impl Field for Rational {}

/// Least common multiple of the denominators of a set of rationals.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Greatest common divisor of the numerators of a set of rationals.
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_factor_four_discriminant() {
        let n: BigInt = "16733233449".parse().unwrap();
        assert_eq!(integer_sqrt_exact(&n).unwrap(), Some(BigInt::from(129357)));
        assert_eq!(integer_sqrt_exact(&BigInt::from(0)).unwrap(), Some(BigInt::from(0)));
        assert_eq!(integer_sqrt_exact(&BigInt::from(2)).unwrap(), None);
        assert!(integer_sqrt_exact(&BigInt::from(-4)).is_err());
    }

    #[test]
    fn canonical_form() {
        let r = rat(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt_exact(&rat(49, 1152)), None);
        assert_eq!(rational_sqrt_exact(&rat(625, 576)), Some(rat(25, 24)));
        assert_eq!(rational_sqrt_exact(&rat(-1, 4)), None);
    }
}
