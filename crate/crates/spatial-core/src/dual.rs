//! Dual numbers: the forward-mode differentiation backend.
//!
//! A [`Dual`] carries a value and the directional derivative of that value
//! with respect to one seed direction. Running any [`Scalar`]-generic
//! computation on seeded duals produces the exact derivative alongside the
//! value; no tape, no graph.
//!
//! The value component is always computed by the same `f64` expressions as
//! the plain backend, so a dual with zero tangent reproduces the plain
//! result bit for bit.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Forward-mode autodiff scalar: a value and one tangent.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dual {
    /// The value component f(x).
    pub value: f64,
    /// The directional derivative ∇f(x)·d for the seeded direction d.
    pub tangent: f64,
}

impl Dual {
    /// Lift a value with an explicit tangent seed.
    #[inline]
    pub const fn new(value: f64, tangent: f64) -> Self {
        Self { value, tangent }
    }

    /// A constant: zero tangent, transparent through any computation.
    #[inline]
    pub const fn constant(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    /// A variable seeded with tangent 1.
    #[inline]
    pub const fn variable(value: f64) -> Self {
        Self::new(value, 1.0)
    }
}

impl From<f64> for Dual {
    #[inline]
    fn from(x: f64) -> Self {
        Self::constant(x)
    }
}

impl Add for Dual {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.value + rhs.value, self.tangent + rhs.tangent)
    }
}

impl Sub for Dual {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.value - rhs.value, self.tangent - rhs.tangent)
    }
}

impl Mul for Dual {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.value * rhs.value,
            self.tangent * rhs.value + self.value * rhs.tangent,
        )
    }
}

impl Div for Dual {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        let value = self.value / rhs.value;
        Self::new(
            value,
            (self.tangent - value * rhs.tangent) / rhs.value,
        )
    }
}

impl Neg for Dual {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.value, -self.tangent)
    }
}

impl Scalar for Dual {
    #[inline]
    fn from_f64(x: f64) -> Self {
        Self::constant(x)
    }

    #[inline]
    fn value(self) -> f64 {
        self.value
    }

    /// d/dx sqrt = 1/(2 sqrt); the tangent blows up at 0 just as the true
    /// derivative does.
    #[inline]
    fn sqrt(self) -> Self {
        let s = self.value.sqrt();
        Self::new(s, self.tangent / (2.0 * s))
    }

    /// Non-differentiable at 0; the tangent there follows `f64::signum` of
    /// the value (+1 for +0.0).
    #[inline]
    fn abs(self) -> Self {
        Self::new(self.value.abs(), self.tangent * self.value.signum())
    }

    #[inline]
    fn sin(self) -> Self {
        Self::new(self.value.sin(), self.tangent * self.value.cos())
    }

    #[inline]
    fn cos(self) -> Self {
        Self::new(self.value.cos(), -self.tangent * self.value.sin())
    }

    #[inline]
    fn atan2(self, x: Self) -> Self {
        let denom = self.value * self.value + x.value * x.value;
        Self::new(
            self.value.atan2(x.value),
            (self.tangent * x.value - self.value * x.tangent) / denom,
        )
    }

    #[inline]
    fn exp(self) -> Self {
        let e = self.value.exp();
        Self::new(e, self.tangent * e)
    }

    #[inline]
    fn ln(self) -> Self {
        Self::new(self.value.ln(), self.tangent / self.value)
    }

    #[inline]
    fn is_finite(self) -> bool {
        self.value.is_finite() && self.tangent.is_finite()
    }
}

/// Directional derivative ∇f(x)·direction from a single dual evaluation.
pub fn directional_derivative<F>(f: F, x: &[f64], direction: &[f64]) -> f64
where
    F: Fn(&[Dual]) -> Dual,
{
    assert_eq!(
        x.len(),
        direction.len(),
        "input and direction must have the same length"
    );
    let seeded: Vec<Dual> = x
        .iter()
        .zip(direction)
        .map(|(&v, &s)| Dual::new(v, s))
        .collect();
    f(&seeded).tangent
}

/// Full gradient of a scalar function by n directional passes along the
/// basis directions.
pub fn gradient<F>(f: F, x: &[f64]) -> Vec<f64>
where
    F: Fn(&[Dual]) -> Dual,
{
    let mut seeded: Vec<Dual> = x.iter().map(|&v| Dual::constant(v)).collect();
    let mut grad = vec![0.0; x.len()];
    for i in 0..x.len() {
        seeded[i].tangent = 1.0;
        grad[i] = f(&seeded).tangent;
        seeded[i].tangent = 0.0;
    }
    grad
}
