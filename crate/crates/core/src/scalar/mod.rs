//! Exact scalars: arbitrary-precision rationals and univariate rational
//! functions in the formal parameter κ.
//!
//! Every value is canonical on construction, so equality is structural.
//! [`RationalFunctionK`] is the coefficient field ℚ(κ) used throughout the
//! polynomial layer; [`Rational`] is what remains after specializing κ to a
//! rational parameter value.

mod ratfun;
mod rational;
mod unipoly;

pub use ratfun::RationalFunctionK;
pub use rational::Rational;
pub use unipoly::UniPolyK;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("pole at κ = {0}")]
    PoleAt(Rational),
    #[error("vanishing order is undefined for the zero function")]
    ZeroFunction,
    #[error("pole at κ = {at} of order {order} exceeds the scaling power")]
    PoleTooDeep { at: Rational, order: i64 },
}

/// Coefficient field for sparse polynomials: either ℚ(κ) (formal parameter)
/// or ℚ (specialized parameter). All arithmetic is exact.
pub trait Scalar:
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
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Scalar for RationalFunctionK {
    fn zero() -> Self {
        RationalFunctionK::zero()
    }
    fn one() -> Self {
        RationalFunctionK::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunctionK::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        RationalFunctionK::from_int(n)
    }
}
