//! Shared generators for the property suites. Seeded so every run checks
//! the same cases.
#![allow(dead_code)] // each test binary uses a different subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spatial_core::{Quaternion, RigidTransform, Vec3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random rotation (Shoemake's subgroup algorithm).
pub fn random_rotation(rng: &mut ChaCha8Rng) -> Quaternion<f64> {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen();
    let u3: f64 = rng.gen();
    let tau = std::f64::consts::TAU;
    let a = (1.0 - u1).sqrt();
    let b = u1.sqrt();
    Quaternion::from_quat(
        [
            a * (tau * u2).sin(),
            a * (tau * u2).cos(),
            b * (tau * u3).sin(),
            b * (tau * u3).cos(),
        ],
        true,
    )
    .expect("norm is 1 by construction")
}

/// Rotation vector with direction uniform on the sphere and magnitude in
/// (lo, hi).
pub fn random_rotvec(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Vec3<f64> {
    let q = random_rotation(rng);
    let axis_from = q.apply([1.0, 0.0, 0.0]);
    let mag = lo + (hi - lo) * rng.gen::<f64>();
    [axis_from[0] * mag, axis_from[1] * mag, axis_from[2] * mag]
}

pub fn random_vector(rng: &mut ChaCha8Rng, scale: f64) -> Vec3<f64> {
    [
        scale * (2.0 * rng.gen::<f64>() - 1.0),
        scale * (2.0 * rng.gen::<f64>() - 1.0),
        scale * (2.0 * rng.gen::<f64>() - 1.0),
    ]
}

pub fn random_transform(rng: &mut ChaCha8Rng) -> RigidTransform<f64> {
    RigidTransform::from_components(random_rotation(rng), random_vector(rng, 3.0))
}

/// Componentwise max |a - b| after aligning quaternion signs (q and -q are
/// the same rotation).
pub fn quat_distance(a: &Quaternion<f64>, b: &Quaternion<f64>) -> f64 {
    let av = a.as_quat();
    let bv = b.as_quat();
    let dot: f64 = av.iter().zip(&bv).map(|(x, y)| x * y).sum();
    let sign = if dot < 0.0 { -1.0 } else { 1.0 };
    av.iter()
        .zip(&bv)
        .map(|(x, y)| (x - sign * y).abs())
        .fold(0.0, f64::max)
}

pub fn vec_distance(a: Vec3<f64>, b: Vec3<f64>) -> f64 {
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
