//! Scalar-generic 3D rotations and rigid transforms with batch
//! broadcasting and built-in forward-mode differentiation.
//!
//! Rotations are represented canonically as unit quaternions
//! ([`Quaternion`], scalar-last `[x, y, z, w]`); rigid transforms pair a
//! rotation with a translation ([`RigidTransform`]) and import/export the
//! homogeneous 4x4 form. Every routine is generic over the [`Scalar`]
//! backend, so the same code runs on plain `f64` and on [`Dual`] numbers,
//! which carry exact directional derivatives through constructors,
//! composition, and application — including the small-angle regions of the
//! exp/log maps, which use matched Taylor series so they stay smooth
//! through zero.
//!
//! Batched containers ([`RotationBatch`], [`TransformBatch`]) broadcast
//! across arbitrary leading dimensions with standard right-aligned rules;
//! their kernels are pinned to the scalar operations by loop equivalence.

pub mod batch;
pub mod dual;
pub mod error;
pub mod euler;
pub mod matrix;
pub mod rotation;
pub mod scalar;
pub mod transform;
pub mod vec3;

pub use batch::{broadcast_shapes, BatchShape, Mat3Batch, RotationBatch, TransformBatch, Vec3Batch};
pub use dual::{directional_derivative, gradient, Dual};
pub use error::SpatialError;
pub use euler::{Axis, EulerSeq, GIMBAL_LOCK_TOL};
pub use matrix::{Mat3, Mat4};
pub use rotation::{Quaternion, SMALL_ANGLE};
pub use scalar::Scalar;
pub use transform::RigidTransform;
pub use vec3::Vec3;
