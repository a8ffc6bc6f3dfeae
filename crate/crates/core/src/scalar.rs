//! Coefficient traits shared by the polynomial and series types.
//!
//! Everything in this crate is exact: the polynomial containers are generic
//! over a [`Ring`] (typically [`num_bigint::BigInt`]) and root counting is
//! generic over a [`Field`] (typically [`num_rational::BigRational`]).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// Embeds a machine integer.
    fn from_i64(v: i64) -> Self;

    /// Sign of the value: -1, 0 or 1.
    fn signum_i8(&self) -> i8;
}

/// A ring where every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn signum_i8(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Ring for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn signum_i8(&self) -> i8 {
        self.signum() as i8
    }
}

impl<T> Ring for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + Send + Sync + From<i64>,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn signum_i8(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl<T> Field for Ratio<T> where
    T: Clone + Integer + Signed + Debug + Display + Send + Sync + From<i64>
{
}

/// Lossless conversion from big integers, used when lifting integer
/// polynomials into a field for root counting.
pub trait FromBigInt {
    fn from_bigint(v: &BigInt) -> Self;
}

impl FromBigInt for BigInt {
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
}

impl FromBigInt for Ratio<BigInt> {
    fn from_bigint(v: &BigInt) -> Self {
        Ratio::from_integer(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn signs() {
        assert_eq!(BigInt::from(-3).signum_i8(), -1);
        assert_eq!(0i64.signum_i8(), 0);
        assert_eq!(BigRational::from_i64(5).signum_i8(), 1);
        assert_eq!(Ratio::<i64>::new(-1, 3).signum_i8(), -1);
    }
}
