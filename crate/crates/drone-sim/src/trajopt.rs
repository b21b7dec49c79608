//! Gradient-based trajectory optimization over the differentiable rollout.
//!
//! A control sequence is a flat vector of 4 parameters per step: the three
//! body torques and a pre-activation thrust that passes through a softplus,
//! which keeps realized thrust nonnegative without constraints. The loss is
//! weighted waypoint tracking (position, optional attitude) plus control
//! regularization; its gradient is exact, computed by one dual-number
//! rollout per parameter. The optimizer is adaptive-moment gradient descent
//! with global gradient-norm clipping.

use spatial_core::{vec3, Dual, Quaternion, Scalar};
use thiserror::Error;

use crate::dynamics::{rollout, ControlInput, DroneParams, DroneState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrajOptError {
    #[error("non-finite {quantity} at iteration {iteration}")]
    Diverged {
        quantity: &'static str,
        iteration: usize,
    },

    #[error("reference trajectory has {got} {what}, horizon {horizon} needs {expected}")]
    ReferenceLength {
        what: &'static str,
        got: usize,
        expected: usize,
        horizon: usize,
    },

    #[error("optimizer config: {name} = {value} is out of range")]
    BadConfig { name: &'static str, value: f64 },
}

/// Numerically stable softplus, `ln(1 + e^x)`, on any backend.
pub fn softplus<T: Scalar>(x: T) -> T {
    let v = x.value();
    if v > 30.0 {
        x
    } else if v < -30.0 {
        x.exp()
    } else {
        (T::one() + x.exp()).ln()
    }
}

/// Inverse of [`softplus`] on plain floats: `ln(e^y - 1)` for y > 0.
pub fn inverse_softplus(y: f64) -> f64 {
    if y > 30.0 {
        y
    } else {
        y.max(1e-300).exp_m1().ln()
    }
}

/// H steps of torque + thrust, stored as the flat parameter vector the
/// optimizer works on: `[τx, τy, τz, thrust-pre-activation]` per step.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSequence {
    horizon: usize,
    params: Vec<f64>,
}

impl ControlSequence {
    /// All-zero torques with the given realized thrust on every step.
    pub fn constant_thrust(horizon: usize, thrust: f64) -> Self {
        let pre = inverse_softplus(thrust);
        let mut params = vec![0.0; 4 * horizon];
        for k in 0..horizon {
            params[4 * k + 3] = pre;
        }
        Self { horizon, params }
    }

    /// Hover initialization: zero torque, thrust balancing gravity.
    pub fn hover(params: &DroneParams<f64>, horizon: usize) -> Self {
        Self::constant_thrust(horizon, params.mass * vec3::norm(params.gravity))
    }

    pub fn from_flat(params: Vec<f64>) -> Self {
        assert!(
            params.len() % 4 == 0,
            "flat control vector length must be a multiple of 4"
        );
        Self {
            horizon: params.len() / 4,
            params,
        }
    }

    /// Encode realized control inputs (thrust must be positive so the
    /// softplus reparameterization is invertible).
    pub fn from_inputs(inputs: &[ControlInput<f64>]) -> Self {
        let mut params = Vec::with_capacity(4 * inputs.len());
        for u in inputs {
            params.extend_from_slice(&u.torque);
            params.push(inverse_softplus(u.thrust));
        }
        Self {
            horizon: inputs.len(),
            params,
        }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.params
    }

    /// Realized control inputs (softplus applied to the thrust entries).
    pub fn inputs(&self) -> Vec<ControlInput<f64>> {
        decode_controls(&self.params)
    }
}

/// Decode a flat parameter slice into realized controls on any backend.
fn decode_controls<T: Scalar>(flat: &[T]) -> Vec<ControlInput<T>> {
    flat.chunks_exact(4)
        .map(|c| ControlInput {
            torque: [c[0], c[1], c[2]],
            thrust: softplus(c[3]),
        })
        .collect()
}

/// Waypoints to track: H+1 positions, optional H+1 attitudes, and the
/// loss weights.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTrajectory {
    pub positions: Vec<[f64; 3]>,
    pub attitudes: Option<Vec<Quaternion<f64>>>,
    pub w_pos: f64,
    pub w_att: f64,
    pub w_reg: f64,
}

impl ReferenceTrajectory {
    /// Track a fixed position (and level attitude when `w_att > 0`).
    pub fn hold_position(position: [f64; 3], horizon: usize, w_pos: f64, w_att: f64, w_reg: f64) -> Self {
        Self {
            positions: vec![position; horizon + 1],
            attitudes: Some(vec![Quaternion::identity(); horizon + 1]),
            w_pos,
            w_att,
            w_reg,
        }
    }

    pub fn validate(&self, horizon: usize) -> Result<(), TrajOptError> {
        if self.positions.len() != horizon + 1 {
            return Err(TrajOptError::ReferenceLength {
                what: "positions",
                got: self.positions.len(),
                expected: horizon + 1,
                horizon,
            });
        }
        if let Some(atts) = &self.attitudes {
            if atts.len() != horizon + 1 {
                return Err(TrajOptError::ReferenceLength {
                    what: "attitudes",
                    got: atts.len(),
                    expected: horizon + 1,
                    horizon,
                });
            }
        }
        for (name, w) in [
            ("w_pos", self.w_pos),
            ("w_att", self.w_att),
            ("w_reg", self.w_reg),
        ] {
            if !(w >= 0.0) {
                return Err(TrajOptError::BadConfig { name, value: w });
            }
        }
        Ok(())
    }
}

/// The tracking loss on any backend:
/// `Σ_k [w_pos·|p_k − p̂_k|² + w_att·θ(q_k, q̂_k)²] + w_reg·Σ_k |u_k|²`.
///
/// The attitude term uses the squared geodesic angle of the relative
/// rotation, evaluated in its smooth-at-identity form so dual gradients
/// stay finite when a waypoint is matched exactly.
pub fn loss_generic<T: Scalar>(
    params: &DroneParams<T>,
    s0: &DroneState<T>,
    flat: &[T],
    reference: &ReferenceTrajectory,
) -> T {
    let controls = decode_controls(flat);
    let states = rollout(params, s0, &controls);
    debug_assert_eq!(states.len(), reference.positions.len());

    let w_pos = T::from_f64(reference.w_pos);
    let w_att = T::from_f64(reference.w_att);
    let w_reg = T::from_f64(reference.w_reg);

    let mut total = T::zero();
    for (k, state) in states.iter().enumerate() {
        if reference.w_pos != 0.0 {
            let diff = vec3::sub(state.position, vec3::from_f64(reference.positions[k]));
            total = total + w_pos * vec3::norm_squared(diff);
        }
        if reference.w_att != 0.0 {
            if let Some(atts) = &reference.attitudes {
                let target: Quaternion<T> = Quaternion::from_f64_quat(&atts[k]);
                let relative = state.attitude.inverse().compose(&target);
                total = total + w_att * relative.angle_squared();
            }
        }
    }
    if reference.w_reg != 0.0 {
        for u in &controls {
            total = total
                + w_reg * (vec3::norm_squared(u.torque) + u.thrust * u.thrust);
        }
    }
    total
}

/// Tracking loss of a control sequence (plain floats).
///
/// The reference must carry exactly H+1 waypoints.
pub fn loss(
    params: &DroneParams<f64>,
    s0: &DroneState<f64>,
    controls: &ControlSequence,
    reference: &ReferenceTrajectory,
) -> f64 {
    reference
        .validate(controls.horizon())
        .expect("reference length must match the control horizon");
    loss_generic(params, s0, controls.as_flat(), reference)
}

/// Exact gradient of [`loss`] with respect to the flat control vector:
/// one dual-number rollout per parameter (4H forward passes).
pub fn loss_gradient(
    params: &DroneParams<f64>,
    s0: &DroneState<f64>,
    controls: &ControlSequence,
    reference: &ReferenceTrajectory,
) -> Vec<f64> {
    reference
        .validate(controls.horizon())
        .expect("reference length must match the control horizon");
    let lifted_params = params.lift::<Dual>();
    let lifted_s0 = s0.lift::<Dual>();
    spatial_core::gradient(
        |flat| loss_generic(&lifted_params, &lifted_s0, flat, reference),
        controls.as_flat(),
    )
}

/// Adaptive-moment gradient descent settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub iterations: usize,
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub clip_norm: f64,
    /// Stop when the loss decrease over 10 iterations falls below this.
    pub tolerance: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            iterations: 500,
            learning_rate: 0.05,
            beta1: 0.9,
            beta2: 0.999,
            clip_norm: 10.0,
            tolerance: 1e-12,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<(), TrajOptError> {
        let checks = [
            ("iterations", self.iterations as f64, self.iterations > 0),
            (
                "learning_rate",
                self.learning_rate,
                self.learning_rate > 0.0,
            ),
            (
                "beta1",
                self.beta1,
                self.beta1 > 0.0 && self.beta1 < 1.0,
            ),
            (
                "beta2",
                self.beta2,
                self.beta2 > 0.0 && self.beta2 < 1.0,
            ),
            ("clip_norm", self.clip_norm, self.clip_norm > 0.0),
            ("tolerance", self.tolerance, self.tolerance > 0.0),
        ];
        for (name, value, ok) in checks {
            if !ok {
                return Err(TrajOptError::BadConfig { name, value });
            }
        }
        Ok(())
    }
}

/// Result of an optimization run: the best-seen controls and the loss at
/// the start of every iteration (entry 0 is the initial loss).
#[derive(Debug, Clone)]
pub struct OptimizeOutcome {
    pub controls: ControlSequence,
    pub best_loss: f64,
    pub loss_history: Vec<f64>,
}

/// Minimize the tracking loss over the control sequence.
///
/// Deterministic: a fixed initial sequence and config reproduce the loss
/// history bit for bit. Aborts with the iteration index if the loss or
/// gradient turns non-finite.
pub fn optimize(
    params: &DroneParams<f64>,
    s0: &DroneState<f64>,
    initial: &ControlSequence,
    reference: &ReferenceTrajectory,
    cfg: &OptimizerConfig,
) -> Result<OptimizeOutcome, TrajOptError> {
    cfg.validate()?;
    reference.validate(initial.horizon())?;

    let lifted_params = params.lift::<Dual>();
    let lifted_s0 = s0.lift::<Dual>();
    let eval_gradient = |flat: &[f64]| -> (f64, Vec<f64>) {
        let n = flat.len();
        let mut seeded: Vec<Dual> = flat.iter().map(|&v| Dual::constant(v)).collect();
        let mut grad = vec![0.0; n];
        let mut value = loss_generic(&lifted_params, &lifted_s0, &seeded, reference).value;
        for i in 0..n {
            seeded[i].tangent = 1.0;
            let out = loss_generic(&lifted_params, &lifted_s0, &seeded, reference);
            seeded[i].tangent = 0.0;
            grad[i] = out.tangent;
            value = out.value;
        }
        (value, grad)
    };

    let mut x = initial.as_flat().to_vec();
    let n = x.len();
    let mut m = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut best = x.clone();
    let mut best_loss = f64::INFINITY;
    let mut history = Vec::with_capacity(cfg.iterations);
    const ADAM_EPS: f64 = 1e-8;

    for iteration in 0..cfg.iterations {
        let (value, mut grad) = eval_gradient(&x);
        if !value.is_finite() {
            return Err(TrajOptError::Diverged {
                quantity: "loss",
                iteration,
            });
        }
        if grad.iter().any(|g| !g.is_finite()) {
            return Err(TrajOptError::Diverged {
                quantity: "gradient",
                iteration,
            });
        }
        history.push(value);
        if value < best_loss {
            best_loss = value;
            best.copy_from_slice(&x);
        }

        // Converged when 10 iterations bought less than the tolerance.
        if iteration >= 10 {
            let decrease = history[iteration - 10] - value;
            if decrease < cfg.tolerance {
                break;
            }
        }

        let norm: f64 = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if norm > cfg.clip_norm {
            let s = cfg.clip_norm / norm;
            for g in &mut grad {
                *g *= s;
            }
        }

        let t = (iteration + 1) as f64;
        let bc1 = 1.0 - cfg.beta1.powf(t);
        let bc2 = 1.0 - cfg.beta2.powf(t);
        for i in 0..n {
            m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * grad[i];
            v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * grad[i] * grad[i];
            let m_hat = m[i] / bc1;
            let v_hat = v[i] / bc2;
            x[i] -= cfg.learning_rate * m_hat / (v_hat.sqrt() + ADAM_EPS);
        }
    }

    Ok(OptimizeOutcome {
        controls: ControlSequence::from_flat(best),
        best_loss,
        loss_history: history,
    })
}
