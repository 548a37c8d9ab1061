use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::CoreError;
use crate::linalg::Matrix;
use crate::rational::Rational;

/// An exact commutative field used as a coefficient domain.
///
/// Elements are immutable values. Inversion returns `None` exactly on zero.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
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
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, CoreError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.clone() * o)
    }

    /// Integer power; negative exponents require an invertible base.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }

    /// Optional specialised row reduction. Returning `None` selects the
    /// generic Gauss–Jordan routine.
    fn rref_hook(_m: &Matrix<Self>) -> Option<(Matrix<Self>, Vec<usize>)> {
        None
    }
}
