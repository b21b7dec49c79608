//! Quadrotor rigid-body dynamics.
//!
//! The rotational core follows Euler's equations in the body frame,
//!
//! ```text
//! ω̇_b = J⁻¹ (τ_b − ω_b × (J ω_b)),    q̇ = ½ (q ⊗ q_ω)
//! ```
//!
//! with attitude advanced by the group exponential
//! `q' = q ⊗ exp(ω_b · dt)`, which keeps the quaternion unit by
//! construction instead of relying on renormalization of an additive
//! update.
//!
//! Translational dynamics (point mass under gravity and collective
//! body-z thrust) are an extension beyond the rotational equations so that
//! position trajectories exist for the optimizer; they are deliberately
//! minimal: no drag, no motor model, no ground.
//!
//! Everything is generic over the scalar backend, so a rollout seeded with
//! dual-number controls carries exact state tangents.

use spatial_core::{vec3, Mat3, Quaternion, Scalar, Vec3};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("inertia matrix is not symmetric: |J[{i}][{j}] - J[{j}][{i}]| = {defect}")]
    NotSymmetric { i: usize, j: usize, defect: f64 },

    #[error("inertia matrix is not positive definite: leading principal minor {order} = {minor}")]
    NotPositiveDefinite { order: usize, minor: f64 },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite")]
    NonFinite { name: &'static str },
}

/// Symmetric positive-definite inertia matrix with its inverse precomputed
/// at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InertiaMatrix<T> {
    j: Mat3<T>,
    j_inv: Mat3<T>,
}

impl<T: Scalar> InertiaMatrix<T> {
    /// Validates symmetry (1e-12) and positive definiteness via the three
    /// leading principal minors, then stores J and J⁻¹.
    pub fn new(j: Mat3<T>) -> Result<Self, DynamicsError> {
        let m = j.value();
        for i in 0..3 {
            for jj in 0..3 {
                if !m[(i, jj)].is_finite() {
                    return Err(DynamicsError::NonFinite { name: "inertia" });
                }
            }
        }
        for i in 0..3 {
            for jj in (i + 1)..3 {
                let defect = (m[(i, jj)] - m[(jj, i)]).abs();
                if defect > 1e-12 {
                    return Err(DynamicsError::NotSymmetric { i, j: jj, defect });
                }
            }
        }
        let minor1 = m[(0, 0)];
        let minor2 = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        let minor3 = m.det();
        for (order, minor) in [(1, minor1), (2, minor2), (3, minor3)] {
            if !(minor > 0.0) {
                return Err(DynamicsError::NotPositiveDefinite { order, minor });
            }
        }
        Ok(Self {
            j_inv: j.inverse(),
            j,
        })
    }

    pub fn from_diagonal(d: Vec3<f64>) -> Result<InertiaMatrix<T>, DynamicsError> {
        let z = T::zero();
        let m = Mat3([
            [T::from_f64(d[0]), z, z],
            [z, T::from_f64(d[1]), z],
            [z, z, T::from_f64(d[2])],
        ]);
        Self::new(m)
    }

    pub fn matrix(&self) -> &Mat3<T> {
        &self.j
    }

    pub fn inverse(&self) -> &Mat3<T> {
        &self.j_inv
    }
}

/// Physical parameters of the vehicle plus the integrator step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DroneParams<T> {
    pub inertia: InertiaMatrix<T>,
    pub mass: T,
    pub gravity: Vec3<T>,
    pub dt: T,
}

impl<T: Scalar> DroneParams<T> {
    pub fn new(
        inertia: InertiaMatrix<T>,
        mass: f64,
        gravity: Vec3<f64>,
        dt: f64,
    ) -> Result<Self, DynamicsError> {
        if !(mass > 0.0) {
            return Err(DynamicsError::NonPositive {
                name: "mass",
                value: mass,
            });
        }
        if !(dt > 0.0) {
            return Err(DynamicsError::NonPositive {
                name: "dt",
                value: dt,
            });
        }
        if !gravity.iter().all(|g| g.is_finite()) {
            return Err(DynamicsError::NonFinite { name: "gravity" });
        }
        Ok(Self {
            inertia,
            mass: T::from_f64(mass),
            gravity: vec3::from_f64(gravity),
            dt: T::from_f64(dt),
        })
    }

    /// Plausible small-quadrotor defaults: J = diag(0.01, 0.01, 0.02) kg·m²,
    /// mass 0.5 kg, standard gravity, dt = 10 ms.
    pub fn small_quad() -> DroneParams<T> {
        DroneParams::new(
            InertiaMatrix::from_diagonal([0.01, 0.01, 0.02]).expect("SPD by construction"),
            0.5,
            [0.0, 0.0, -9.81],
            0.01,
        )
        .expect("defaults are valid")
    }

}

impl DroneParams<f64> {
    /// Lift plain-float parameters into another backend.
    pub fn lift<U: Scalar>(&self) -> DroneParams<U> {
        DroneParams {
            inertia: InertiaMatrix {
                j: Mat3::from_f64(&self.inertia.j),
                j_inv: Mat3::from_f64(&self.inertia.j_inv),
            },
            mass: U::from_f64(self.mass),
            gravity: vec3::from_f64(self.gravity),
            dt: U::from_f64(self.dt),
        }
    }
}

/// Vehicle state: attitude (body-to-world), body-frame angular velocity,
/// world-frame position and velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DroneState<T> {
    pub attitude: Quaternion<T>,
    pub angular_velocity: Vec3<T>,
    pub position: Vec3<T>,
    pub velocity: Vec3<T>,
}

impl<T: Scalar> DroneState<T> {
    /// At rest, level, at the origin.
    pub fn at_rest() -> Self {
        Self {
            attitude: Quaternion::identity(),
            angular_velocity: vec3::zero(),
            position: vec3::zero(),
            velocity: vec3::zero(),
        }
    }

    pub fn value(&self) -> DroneState<f64> {
        DroneState {
            attitude: self.attitude.value(),
            angular_velocity: vec3::value(self.angular_velocity),
            position: vec3::value(self.position),
            velocity: vec3::value(self.velocity),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.attitude.as_quat().iter().all(|c| c.is_finite())
            && self.angular_velocity.iter().all(|c| c.is_finite())
            && self.position.iter().all(|c| c.is_finite())
            && self.velocity.iter().all(|c| c.is_finite())
    }
}

impl DroneState<f64> {
    /// Lift a plain-float state into another backend.
    pub fn lift<U: Scalar>(&self) -> DroneState<U> {
        DroneState {
            attitude: Quaternion::from_f64_quat(&self.attitude),
            angular_velocity: vec3::from_f64(self.angular_velocity),
            position: vec3::from_f64(self.position),
            velocity: vec3::from_f64(self.velocity),
        }
    }
}

/// Control input for one step: body torques plus collective thrust along
/// body z. Thrust nonnegativity is the optimizer's responsibility (it
/// parameterizes thrust through a softplus), not a type invariant here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlInput<T> {
    pub torque: Vec3<T>,
    pub thrust: T,
}

impl<T: Scalar> ControlInput<T> {
    pub fn zero() -> Self {
        Self {
            torque: vec3::zero(),
            thrust: T::zero(),
        }
    }

    /// Torque-free input whose thrust exactly balances gravity for the
    /// given parameters (level attitude).
    pub fn hover(params: &DroneParams<T>) -> Self {
        Self {
            torque: vec3::zero(),
            thrust: params.mass * vec3::norm(params.gravity),
        }
    }

}

impl ControlInput<f64> {
    /// Lift a plain-float input into another backend.
    pub fn lift<U: Scalar>(&self) -> ControlInput<U> {
        ControlInput {
            torque: vec3::from_f64(self.torque),
            thrust: U::from_f64(self.thrust),
        }
    }
}

/// Euler's equations: `ω̇_b = J⁻¹ (τ_b − ω_b × (J ω_b))`.
pub fn angular_acceleration<T: Scalar>(
    params: &DroneParams<T>,
    omega_b: Vec3<T>,
    tau_b: Vec3<T>,
) -> Vec3<T> {
    let j_omega = params.inertia.matrix().mul_vec(omega_b);
    let gyro = vec3::cross(omega_b, j_omega);
    params.inertia.inverse().mul_vec(vec3::sub(tau_b, gyro))
}

/// Quaternion kinematics `q̇ = ½ (q ⊗ q_ω)` with the pure quaternion
/// `q_ω = [ω_x, ω_y, ω_z, 0]`, as a plain 4-vector `[ẋ, ẏ, ż, ẇ]`.
///
/// Used to validate the exponential integrator (first-order agreement);
/// the integrator itself never differentiates the quaternion additively.
pub fn quat_derivative<T: Scalar>(q: &Quaternion<T>, omega_b: Vec3<T>) -> [T; 4] {
    let half = T::from_f64(0.5);
    let (qx, qy, qz, qw) = (q.x, q.y, q.z, q.w);
    let (wx, wy, wz) = (omega_b[0], omega_b[1], omega_b[2]);
    // q ⊗ [w, 0] expanded; no renormalization, this is a tangent vector.
    [
        (qw * wx + qy * wz - qz * wy) * half,
        (qw * wy - qx * wz + qz * wx) * half,
        (qw * wz + qx * wy - qy * wx) * half,
        (-qx * wx - qy * wy - qz * wz) * half,
    ]
}

/// Advance attitude by the group exponential:
/// `q' = q ⊗ exp(ω_b · dt)`. Unit norm is preserved by construction.
pub fn integrate_ang_vel<T: Scalar>(rot: &Quaternion<T>, omega_b: Vec3<T>, dt: T) -> Quaternion<T> {
    rot.compose(&Quaternion::from_rotvec(vec3::scale(omega_b, dt)))
}

/// One semi-implicit step: angular velocity first, then attitude with the
/// new angular velocity; likewise velocity before position. Thrust acts
/// along the body z axis of the pre-step attitude.
pub fn step<T: Scalar>(
    params: &DroneParams<T>,
    s: &DroneState<T>,
    u: &ControlInput<T>,
) -> DroneState<T> {
    let dt = params.dt;

    let omega_dot = angular_acceleration(params, s.angular_velocity, u.torque);
    let omega_new = vec3::add(s.angular_velocity, vec3::scale(omega_dot, dt));
    let attitude_new = integrate_ang_vel(&s.attitude, omega_new, dt);

    let body_z = s.attitude.apply([T::zero(), T::zero(), T::one()]);
    let accel = vec3::add(params.gravity, vec3::scale(body_z, u.thrust / params.mass));
    let velocity_new = vec3::add(s.velocity, vec3::scale(accel, dt));
    let position_new = vec3::add(s.position, vec3::scale(velocity_new, dt));

    DroneState {
        attitude: attitude_new,
        angular_velocity: omega_new,
        position: position_new,
        velocity: velocity_new,
    }
}

/// Roll the dynamics out over a control sequence. Returns H+1 states
/// including the initial one.
pub fn rollout<T: Scalar>(
    params: &DroneParams<T>,
    s0: &DroneState<T>,
    controls: &[ControlInput<T>],
) -> Vec<DroneState<T>> {
    let mut states = Vec::with_capacity(controls.len() + 1);
    states.push(*s0);
    let mut current = *s0;
    for u in controls {
        current = step(params, &current, u);
        states.push(current);
    }
    states
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_vec_close(a: Vec3<f64>, b: Vec3<f64>, tol: f64) {
        for i in 0..3 {
            assert!((a[i] - b[i]).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn inertia_validation() {
        assert!(InertiaMatrix::<f64>::from_diagonal([1.0, 2.0, 3.0]).is_ok());
        assert!(matches!(
            InertiaMatrix::<f64>::from_diagonal([1.0, -2.0, 3.0]),
            Err(DynamicsError::NotPositiveDefinite { order: 2, .. })
        ));
        let asym = Mat3([[1.0, 0.1, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(matches!(
            InertiaMatrix::<f64>::new(asym),
            Err(DynamicsError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn params_validation() {
        let j = InertiaMatrix::from_diagonal([1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            DroneParams::<f64>::new(j, 0.0, [0.0, 0.0, -9.81], 0.01),
            Err(DynamicsError::NonPositive { name: "mass", .. })
        ));
        let j = InertiaMatrix::from_diagonal([1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            DroneParams::<f64>::new(j, 1.0, [0.0, 0.0, -9.81], 0.0),
            Err(DynamicsError::NonPositive { name: "dt", .. })
        ));
    }

    #[test]
    fn angular_acceleration_identity_inertia() {
        let params = DroneParams::<f64>::new(
            InertiaMatrix::from_diagonal([1.0, 1.0, 1.0]).unwrap(),
            1.0,
            [0.0, 0.0, 0.0],
            0.01,
        )
        .unwrap();
        let a = angular_acceleration(&params, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        assert_eq!(a, [1.0, 0.0, 0.0]);
        let a = angular_acceleration(&params, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]);
        assert_eq!(a, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn angular_acceleration_gyroscopic_hand_case() {
        // J = diag(1,2,3), ω = (1,1,1), τ = 0:
        // Jω = (1,2,3); ω × Jω = (1,-2,1); -J⁻¹(ω×Jω) = (-1, 1, -1/3).
        let params = DroneParams::<f64>::new(
            InertiaMatrix::from_diagonal([1.0, 2.0, 3.0]).unwrap(),
            1.0,
            [0.0, 0.0, 0.0],
            0.01,
        )
        .unwrap();
        let a = angular_acceleration(&params, [1.0, 1.0, 1.0], [0.0, 0.0, 0.0]);
        assert!((a[0] - (-1.0)).abs() < 1e-15);
        assert!((a[1] - 1.0).abs() < 1e-15);
        assert!((a[2] - (-1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn quat_derivative_pure_spin() {
        let q = Quaternion::<f64>::identity();
        let dq = quat_derivative(&q, [0.0, 0.0, 2.0]);
        assert_eq!(dq, [0.0, 0.0, 1.0, 0.0]);
        let dq = quat_derivative(&q, [0.0, 0.0, 0.0]);
        assert_eq!(dq, [0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn integrator_first_order_consistency() {
        // (exp-integrated q(h) - q)/h approaches q̇ with O(h) error:
        // Richardson at h and h/10 shrinks the defect by ~10.
        let q = Quaternion::<f64>::from_rotvec([0.3, -0.2, 0.5]);
        let omega = [0.7, 0.4, -1.1];
        let dq = quat_derivative(&q, omega);
        let defect = |h: f64| -> f64 {
            let qh = integrate_ang_vel(&q, omega, h);
            let fd = [
                (qh.x - q.x) / h,
                (qh.y - q.y) / h,
                (qh.z - q.z) / h,
                (qh.w - q.w) / h,
            ];
            fd.iter()
                .zip(&dq)
                .map(|(f, d)| (f - d).abs())
                .fold(0.0, f64::max)
        };
        let d1 = defect(1e-4);
        let d2 = defect(1e-5);
        assert!(d1 < 1e-3, "defect at h=1e-4 was {d1}");
        let ratio = d1 / d2;
        assert!(
            (5.0..20.0).contains(&ratio),
            "first-order convergence ratio was {ratio}"
        );
    }

    #[test]
    fn integrate_zero_omega_is_identity_operation() {
        let q = Quaternion::<f64>::from_rotvec([0.2, 0.1, -0.4]);
        let q2 = integrate_ang_vel(&q, [0.0, 0.0, 0.0], 0.5);
        for (a, b) in q.as_quat().iter().zip(q2.as_quat()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn integrate_definition_unwinds() {
        let q = integrate_ang_vel(
            &Quaternion::<f64>::identity(),
            [0.0, 0.0, std::f64::consts::PI],
            0.5,
        );
        let expect = Quaternion::from_rotvec([0.0, 0.0, std::f64::consts::FRAC_PI_2]);
        for (a, b) in q.as_quat().iter().zip(expect.as_quat()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn hover_is_an_equilibrium() {
        let params = DroneParams::<f64>::small_quad();
        let s0 = DroneState::at_rest();
        let u = ControlInput::hover(&params);
        let s1 = step(&params, &s0, &u);
        assert_vec_close(s1.position, s0.position, 1e-12);
        assert_vec_close(s1.velocity, s0.velocity, 1e-12);
        assert_vec_close(s1.angular_velocity, [0.0, 0.0, 0.0], 1e-12);
        assert!((s1.attitude.w - 1.0).abs() < 1e-12);
    }

    #[test]
    fn free_fall_gains_dt_gravity() {
        let params = DroneParams::<f64>::small_quad();
        let s0 = DroneState::at_rest();
        let s1 = step(&params, &s0, &ControlInput::zero());
        assert_eq!(s1.velocity, [0.0, 0.0, -9.81 * 0.01]);
    }

    #[test]
    fn torque_impulse_from_rest() {
        // One step: ω' = dt·J⁻¹τ, q' = exp(ω'·dt) = exp(dt²·J⁻¹τ).
        let params = DroneParams::<f64>::small_quad();
        let s0 = DroneState::at_rest();
        let tau = [0.0, 0.0, 0.004];
        let u = ControlInput {
            torque: tau,
            thrust: 0.0,
        };
        let s1 = step(&params, &s0, &u);
        let jinv_tau = params.inertia.inverse().mul_vec(tau);
        let expect = Quaternion::from_rotvec(vec3::scale(jinv_tau, 0.01 * 0.01));
        for (a, b) in s1.attitude.as_quat().iter().zip(expect.as_quat()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn rollout_has_h_plus_one_states() {
        let params = DroneParams::<f64>::small_quad();
        let s0 = DroneState::at_rest();
        let controls = vec![ControlInput::hover(&params); 5];
        let states = rollout(&params, &s0, &controls);
        assert_eq!(states.len(), 6);
        assert_eq!(states[0], s0);
    }

    #[test]
    fn zero_everything_stays_constant() {
        let j = InertiaMatrix::from_diagonal([0.01, 0.01, 0.02]).unwrap();
        let params = DroneParams::<f64>::new(j, 0.5, [0.0, 0.0, 0.0], 0.01).unwrap();
        let s0 = DroneState::at_rest();
        let states = rollout(&params, &s0, &vec![ControlInput::zero(); 100]);
        for s in &states {
            assert_eq!(s.position, [0.0, 0.0, 0.0]);
            assert_eq!(s.velocity, [0.0, 0.0, 0.0]);
            assert_eq!(s.attitude.as_quat(), [0.0, 0.0, 0.0, 1.0]);
        }
    }
}
