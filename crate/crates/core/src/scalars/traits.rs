use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Rational;

/// Commutative ring with identity, as used for polynomial and series coefficients.
///
/// Arithmetic goes through the std operator traits on owned values, with a
/// borrowed right-hand side so that callers can avoid needless clones.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Multiplicative inverse if `self` is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// The quotient `self / other` if it exists in the ring.
    fn try_div(&self, other: &Self) -> Option<Self>;

    /// An exact square root if one exists in the ring.
    fn try_sqrt(&self) -> Option<Self> {
        None
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Splits off a sign so that printed sums read `a - b` instead of `a + -b`.
    fn is_negative_display(&self) -> bool {
        false
    }

    /// Whether the printed form is a sum and must be parenthesised as a factor.
    fn needs_parens(&self) -> bool {
        false
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
}
