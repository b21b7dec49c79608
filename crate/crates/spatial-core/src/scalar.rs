//! The scalar abstraction all geometry and dynamics code is generic over.
//!
//! Two backends implement [`Scalar`]: plain `f64` and [`Dual`] for
//! forward-mode differentiation. Code written against the trait runs
//! unchanged on either, so a single implementation of the exp map, the
//! dynamics step, or the rollout loss yields both values and exact
//! directional derivatives.
//!
//! [`Dual`]: crate::dual::Dual

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Operations a numeric backend must provide.
///
/// Domain errors (division by zero, square root of a negative) follow the
/// plain-float backend: they produce non-finite values rather than panics.
/// Branch decisions in generic code must go through [`Scalar::value`], which
/// is the standard smooth-autodiff convention of comparing on the value
/// component only.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Lift a plain float into this backend as a constant.
    fn from_f64(x: f64) -> Self;

    /// The value component, used for comparisons and branching.
    fn value(self) -> f64;

    fn sqrt(self) -> Self;
    fn abs(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    /// Four-quadrant arctangent; `self` is the y argument.
    fn atan2(self, x: Self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;

    /// True when every component of the scalar is finite.
    fn is_finite(self) -> bool;

    #[inline]
    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    #[inline]
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline]
    fn value(self) -> f64 {
        self
    }

    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }

    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }

    #[inline]
    fn sin(self) -> Self {
        f64::sin(self)
    }

    #[inline]
    fn cos(self) -> Self {
        f64::cos(self)
    }

    #[inline]
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }

    #[inline]
    fn exp(self) -> Self {
        f64::exp(self)
    }

    #[inline]
    fn ln(self) -> Self {
        f64::ln(self)
    }

    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}
