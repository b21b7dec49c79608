//! SO(3) rotations stored canonically as unit quaternions.
//!
//! Quaternions are scalar-last: `[x, y, z, w]` with `w` the real part.
//! `q` and `-q` denote the same rotation (double cover); every converter
//! treats them identically. All routines are generic over [`Scalar`], so
//! the same code produces values on `f64` and derivatives on `Dual`.
//!
//! The exp and log maps switch to matched Taylor series below a small-angle
//! threshold. At the threshold the truncation error is below one f64 ULP,
//! so both value and derivative are continuous across the branch, and the
//! series are written in terms of the squared angle so they stay smooth
//! through zero under differentiation.
//!
//! [`Scalar`]: crate::scalar::Scalar

use crate::error::SpatialError;
use crate::matrix::Mat3;
use crate::scalar::Scalar;
use crate::vec3::{self, Vec3};

/// Rotation angle below which exp/log switch to Taylor series (radians).
/// Truncation error of the 4-term series at this threshold is ~1e-40,
/// far below f64 ULP, so the branch is value- and derivative-continuous.
pub const SMALL_ANGLE: f64 = 1e-3;

const SMALL_ANGLE_SQ: f64 = SMALL_ANGLE * SMALL_ANGLE;
// |q_vec| = sin(theta/2) at the same threshold.
const SMALL_IMAG_SQ: f64 = 2.5e-7;

/// Unit quaternion representing a 3D rotation, scalar-last `[x, y, z, w]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub w: T,
}

impl<T: Scalar> Quaternion<T> {
    /// The identity rotation.
    #[inline]
    pub fn identity() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
            w: T::one(),
        }
    }

    /// Build from components `[x, y, z, w]`.
    ///
    /// With `normalize` the input is divided by its norm; otherwise it must
    /// already be unit to within 1e-9. A zero-norm input is rejected.
    pub fn from_quat(q: [T; 4], normalize: bool) -> Result<Self, SpatialError> {
        let norm_sq = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
        let norm = norm_sq.sqrt();
        if !(norm.value() > 0.0) {
            return Err(SpatialError::ZeroQuaternion);
        }
        if normalize {
            Ok(Self {
                x: q[0] / norm,
                y: q[1] / norm,
                z: q[2] / norm,
                w: q[3] / norm,
            })
        } else {
            if (norm.value() - 1.0).abs() > 1e-9 {
                return Err(SpatialError::NotUnit {
                    norm: norm.value(),
                    tolerance: 1e-9,
                });
            }
            Ok(Self {
                x: q[0],
                y: q[1],
                z: q[2],
                w: q[3],
            })
        }
    }

    /// Components as `[x, y, z, w]`.
    #[inline]
    pub fn as_quat(&self) -> [T; 4] {
        [self.x, self.y, self.z, self.w]
    }

    /// Components canonicalized to w >= 0 (ties broken by the first nonzero
    /// imaginary component being positive).
    pub fn as_quat_canonical(&self) -> [T; 4] {
        self.canonical().as_quat()
    }

    /// The sign representative with w >= 0. Ties at w == 0 pick the first
    /// nonzero of x, y, z positive, so `q` and `-q` map to the same output.
    pub fn canonical(&self) -> Self {
        let w = self.w.value();
        let flip = if w < 0.0 {
            true
        } else if w > 0.0 {
            false
        } else {
            let x = self.x.value();
            let y = self.y.value();
            let z = self.z.value();
            if x != 0.0 {
                x < 0.0
            } else if y != 0.0 {
                y < 0.0
            } else {
                z < 0.0
            }
        };
        if flip {
            -*self
        } else {
            *self
        }
    }

    /// Exponential map: rotation vector (axis times angle in radians) to
    /// quaternion, `q = [sin(θ/2)·v/θ, cos(θ/2)]`.
    ///
    /// Below [`SMALL_ANGLE`] both factors are evaluated as series in θ², so
    /// the map is smooth through θ = 0 (no `sqrt(0)` in the derivative path).
    pub fn from_rotvec(v: Vec3<T>) -> Self {
        let theta_sq = vec3::norm_squared(v);
        let (imag_factor, w) = if theta_sq.value() < SMALL_ANGLE_SQ {
            // sin(θ/2)/θ = 1/2 - θ²/48 + θ⁴/3840 - θ⁶/645120
            let imag = T::from_f64(0.5)
                - theta_sq * T::from_f64(1.0 / 48.0)
                + theta_sq * theta_sq * T::from_f64(1.0 / 3840.0)
                - theta_sq * theta_sq * theta_sq * T::from_f64(1.0 / 645_120.0);
            // cos(θ/2) = 1 - θ²/8 + θ⁴/384 - θ⁶/46080
            let w = T::one() - theta_sq * T::from_f64(1.0 / 8.0)
                + theta_sq * theta_sq * T::from_f64(1.0 / 384.0)
                - theta_sq * theta_sq * theta_sq * T::from_f64(1.0 / 46_080.0);
            (imag, w)
        } else {
            let theta = theta_sq.sqrt();
            let half = theta * T::from_f64(0.5);
            (half.sin() / theta, half.cos())
        };
        Self {
            x: v[0] * imag_factor,
            y: v[1] * imag_factor,
            z: v[2] * imag_factor,
            w,
        }
    }

    /// Logarithm map: rotation vector θ·axis with θ in [0, π].
    ///
    /// The sign is canonicalized first so `q` and `-q` give the same output.
    pub fn as_rotvec(&self) -> Vec3<T> {
        let q = self.canonical();
        let imag = [q.x, q.y, q.z];
        let n_sq = vec3::norm_squared(imag);
        let scale = if n_sq.value() < SMALL_IMAG_SQ {
            // 2·atan2(n, w)/n = (2/w)·(1 - t²/3 + t⁴/5 - t⁶/7), t = n/w
            let t_sq = n_sq / (q.w * q.w);
            (T::from_f64(2.0)
                - t_sq * T::from_f64(2.0 / 3.0)
                + t_sq * t_sq * T::from_f64(2.0 / 5.0)
                - t_sq * t_sq * t_sq * T::from_f64(2.0 / 7.0))
                / q.w
        } else {
            let n = n_sq.sqrt();
            let angle = T::from_f64(2.0) * n.atan2(q.w);
            angle / n
        };
        vec3::scale(imag, scale)
    }

    /// Rotation matrix of this quaternion (orthogonal, det +1).
    pub fn as_matrix(&self) -> Mat3<T> {
        let two = T::from_f64(2.0);
        let (x, y, z, w) = (self.x, self.y, self.z, self.w);
        let xx = x * x;
        let yy = y * y;
        let zz = z * z;
        let xy = x * y;
        let xz = x * z;
        let yz = y * z;
        let wx = w * x;
        let wy = w * y;
        let wz = w * z;
        Mat3([
            [
                T::one() - two * (yy + zz),
                two * (xy - wz),
                two * (xz + wy),
            ],
            [
                two * (xy + wz),
                T::one() - two * (xx + zz),
                two * (yz - wx),
            ],
            [
                two * (xz - wy),
                two * (yz + wx),
                T::one() - two * (xx + yy),
            ],
        ])
    }

    /// Quaternion of the nearest rotation to `m`.
    ///
    /// Extraction pivots on the largest of the three diagonal entries and
    /// the trace (Shepperd), which keeps full accuracy in every angle
    /// regime including rotations near π. The input must be orthogonal to
    /// within 1e-6 per entry of RᵀR − I and have positive determinant.
    pub fn from_matrix(m: &Mat3<T>) -> Result<Self, SpatialError> {
        let mv = m.value();
        let gram = mv.transpose() * mv;
        let mut defect = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                let d = (gram[(i, j)] - target).abs();
                if !(d <= defect) {
                    defect = d;
                }
            }
        }
        if !(defect < 1e-6) {
            return Err(SpatialError::NotOrthogonal { defect });
        }
        let det = mv.det();
        if det <= 0.0 {
            return Err(SpatialError::NonPositiveDeterminant { det });
        }

        let trace = m[(0, 0)] + m[(1, 1)] + m[(2, 2)];
        let decision = [
            m[(0, 0)].value(),
            m[(1, 1)].value(),
            m[(2, 2)].value(),
            trace.value(),
        ];
        let mut choice = 0;
        for (idx, &d) in decision.iter().enumerate() {
            if d > decision[choice] {
                choice = idx;
            }
        }

        let mut q = [T::zero(); 4];
        if choice == 3 {
            q[0] = m[(2, 1)] - m[(1, 2)];
            q[1] = m[(0, 2)] - m[(2, 0)];
            q[2] = m[(1, 0)] - m[(0, 1)];
            q[3] = T::one() + trace;
        } else {
            let i = choice;
            let j = (i + 1) % 3;
            let k = (j + 1) % 3;
            q[i] = T::one() - trace + T::from_f64(2.0) * m[(i, i)];
            q[j] = m[(j, i)] + m[(i, j)];
            q[k] = m[(k, i)] + m[(i, k)];
            q[3] = m[(k, j)] - m[(j, k)];
        }
        Quaternion::from_quat(q, true)
    }

    /// Hamilton product `self ⊗ other`, renormalized so long chains of
    /// compositions do not drift off the unit sphere.
    pub fn compose(&self, other: &Self) -> Self {
        let (ax, ay, az, aw) = (self.x, self.y, self.z, self.w);
        let (bx, by, bz, bw) = (other.x, other.y, other.z, other.w);
        let x = aw * bx + ax * bw + ay * bz - az * by;
        let y = aw * by - ax * bz + ay * bw + az * bx;
        let z = aw * bz + ax * by - ay * bx + az * bw;
        let w = aw * bw - ax * bx - ay * by - az * bz;
        let norm = (x * x + y * y + z * z + w * w).sqrt();
        Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
            w: w / norm,
        }
    }

    /// Inverse rotation (conjugate for unit quaternions).
    #[inline]
    pub fn inverse(&self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
            w: self.w,
        }
    }

    /// Rotate a vector by the expanded quaternion-sandwich formula, without
    /// building the matrix: `v' = v + 2w(u×v) + 2(u×(u×v))` with u the
    /// imaginary part.
    pub fn apply(&self, v: Vec3<T>) -> Vec3<T> {
        let u = [self.x, self.y, self.z];
        let t = vec3::scale(vec3::cross(u, v), T::from_f64(2.0));
        vec3::add(vec3::add(v, vec3::scale(t, self.w)), vec3::cross(u, t))
    }

    /// Rotate by the inverse of this rotation.
    #[inline]
    pub fn apply_inverse(&self, v: Vec3<T>) -> Vec3<T> {
        self.inverse().apply(v)
    }

    /// Rotation angle θ = |as_rotvec| in [0, π].
    ///
    /// Non-differentiable at the identity (like |x| at 0); differentiated
    /// code that needs the squared angle should use
    /// [`Quaternion::angle_squared`] instead.
    pub fn magnitude(&self) -> T {
        let n = vec3::norm([self.x, self.y, self.z]);
        T::from_f64(2.0) * n.atan2(self.w.abs())
    }

    /// θ² evaluated in a form that is smooth at the identity, so dual
    /// derivatives stay finite when the rotation is exactly zero. Used by
    /// attitude losses; equals `magnitude()²` to well below f64 precision.
    pub fn angle_squared(&self) -> T {
        let n_sq = self.x * self.x + self.y * self.y + self.z * self.z;
        if n_sq.value() < 1e-8 {
            // 4·atan(t)² = 4t²(1 - 2t²/3 + 23t⁴/45), t² = n²/w²
            let t_sq = n_sq / (self.w * self.w);
            T::from_f64(4.0)
                * t_sq
                * (T::one() - t_sq * T::from_f64(2.0 / 3.0)
                    + t_sq * t_sq * T::from_f64(23.0 / 45.0))
        } else {
            let m = self.magnitude();
            m * m
        }
    }

    /// Unit-norm defect |‖q‖ − 1| of the value components.
    pub fn norm_deviation(&self) -> f64 {
        let n = (self.x * self.x + self.y * self.y + self.z * self.z + self.w * self.w)
            .sqrt()
            .value();
        (n - 1.0).abs()
    }

    /// Lift a plain-float quaternion into any backend as constants.
    pub fn from_f64_quat(q: &Quaternion<f64>) -> Self {
        Self {
            x: T::from_f64(q.x),
            y: T::from_f64(q.y),
            z: T::from_f64(q.z),
            w: T::from_f64(q.w),
        }
    }

    /// Value components, dropping any derivative payload.
    pub fn value(&self) -> Quaternion<f64> {
        Quaternion {
            x: self.x.value(),
            y: self.y.value(),
            z: self.z.value(),
            w: self.w.value(),
        }
    }
}

impl<T: Scalar> std::ops::Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
            w: -self.w,
        }
    }
}
