//! The exact coefficient fields used throughout: arbitrary-precision
//! rationals and (in [`super::ratfunc`]) univariate rational functions.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

/// Arbitrary-precision rational numbers, always reduced with positive
/// denominator (enforced by the underlying representation).
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// The reduced fraction `num/den`.
pub fn rat_from(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact field: just enough operations for elimination and structure
/// constants, implemented by [`Rat`] and [`super::ratfunc::RatFunc`].
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn from_integer(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let neg = v < 0;
        for _ in 0..v.unsigned_abs() {
            acc.add_assign(&one);
        }
        if neg {
            acc.neg()
        } else {
            acc
        }
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <BigRational as num_traits::Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as num_traits::One>::one()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Self {
        assert!(!num_traits::Zero::is_zero(self), "inverse of zero");
        self.recip()
    }

    fn from_integer(v: i64) -> Self {
        rat(v)
    }
}

/// Signum helper for display code.
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}
