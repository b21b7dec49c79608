//! Differentiable quadrotor dynamics and gradient-based trajectory
//! optimization over the scalar-generic rotation primitives.
//!
//! The rotational state lives on the unit quaternions and is advanced by
//! the group exponential, so attitude never leaves the manifold no matter
//! how many steps are taken. Because every operation is generic over the
//! scalar backend, the whole rollout differentiates exactly with dual
//! numbers: that is what the optimizer uses.

pub mod dynamics;
pub mod trajopt;

pub use dynamics::{
    angular_acceleration, integrate_ang_vel, quat_derivative, rollout, step, ControlInput,
    DroneParams, DroneState, DynamicsError, InertiaMatrix,
};
pub use trajopt::{
    inverse_softplus, loss, loss_generic, loss_gradient, optimize, softplus, ControlSequence,
    OptimizeOutcome, OptimizerConfig, ReferenceTrajectory, TrajOptError,
};
