//! Seeded input generation. Inputs for a given (operation, N, seed) are
//! identical across strategies, so timed runs compare the same work.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spatial_core::{Quaternion, RigidTransform, Vec3};

use crate::Operation;

/// Independent stream per (seed, operation, N) so adding grid points never
/// shifts the inputs of existing ones.
pub(crate) fn stream(seed: u64, op: Operation, n: usize) -> ChaCha8Rng {
    let mix = (op as u64) << 56 ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha8Rng::seed_from_u64(seed ^ mix)
}

pub(crate) fn rotation(rng: &mut ChaCha8Rng) -> Quaternion<f64> {
    // Shoemake's uniform quaternion from three uniforms.
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
    .expect("unit by construction")
}

pub(crate) fn vector(rng: &mut ChaCha8Rng) -> Vec3<f64> {
    [
        2.0 * rng.gen::<f64>() - 1.0,
        2.0 * rng.gen::<f64>() - 1.0,
        2.0 * rng.gen::<f64>() - 1.0,
    ]
}

pub(crate) fn transform(rng: &mut ChaCha8Rng) -> RigidTransform<f64> {
    let rotation = rotation(rng);
    let translation = vector(rng);
    RigidTransform::from_components(rotation, translation)
}
