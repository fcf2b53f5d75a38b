//! The coefficient-field abstraction.
//!
//! All core algebra (free algebra, rewriting, linear algebra, series) is
//! generic over an exact field.  Concrete instances are [`super::Rat`],
//! [`super::Cyclo`], [`super::ParamRat`] and [`super::RatFn`].

use super::{NumError, Rat};
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact field.  No rounding, ever.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Embedding of the rationals.
    fn from_rat(x: &Rat) -> Self;

    /// Decimal-free display form used when printing polynomials.
    fn coeff_string(&self) -> String;

    /// Exact division.
    fn div(&self, other: &Self) -> Result<Self, NumError> {
        let inv = other.inv().ok_or(NumError::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    fn from_i64(x: i64) -> Self {
        Self::from_rat(&Rat::from_integer(x.into()))
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn from_rat(x: &Rat) -> Self {
        x.clone()
    }

    fn coeff_string(&self) -> String {
        super::rat_to_string(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rat_field_ops() {
        let a = rat(2, 3);
        assert_eq!(a.inv().unwrap(), rat(3, 2));
        assert!(Rat::zero().inv().is_none());
        assert_eq!(a.div(&rat(1, 3)).unwrap(), rat(2, 1));
        assert_eq!(a.div(&Rat::zero()), Err(NumError::DivisionByZero));
    }
}
