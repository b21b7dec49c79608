//! Free functions over `[T; 3]` vectors, generic over the scalar backend.

use crate::scalar::Scalar;

pub type Vec3<T> = [T; 3];

#[inline]
pub fn zero<T: Scalar>() -> Vec3<T> {
    [T::zero(), T::zero(), T::zero()]
}

#[inline]
pub fn add<T: Scalar>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub<T: Scalar>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn neg<T: Scalar>(a: Vec3<T>) -> Vec3<T> {
    [-a[0], -a[1], -a[2]]
}

#[inline]
pub fn scale<T: Scalar>(a: Vec3<T>, s: T) -> Vec3<T> {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub fn dot<T: Scalar>(a: Vec3<T>, b: Vec3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross<T: Scalar>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm_squared<T: Scalar>(a: Vec3<T>) -> T {
    dot(a, a)
}

#[inline]
pub fn norm<T: Scalar>(a: Vec3<T>) -> T {
    norm_squared(a).sqrt()
}

/// Lift a plain-float vector into any backend as constants.
#[inline]
pub fn from_f64<T: Scalar>(a: Vec3<f64>) -> Vec3<T> {
    [T::from_f64(a[0]), T::from_f64(a[1]), T::from_f64(a[2])]
}

/// Value components of a vector, dropping any derivative payload.
#[inline]
pub fn value<T: Scalar>(a: Vec3<T>) -> Vec3<f64> {
    [a[0].value(), a[1].value(), a[2].value()]
}
