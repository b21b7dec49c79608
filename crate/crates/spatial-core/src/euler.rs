//! Euler-angle conversions for all 12 axis triples in both intrinsic and
//! extrinsic conventions.
//!
//! Sequences are written as three axis letters: uppercase (`"XYZ"`) for
//! intrinsic rotations about the moving body axes, lowercase (`"xyz"`) for
//! extrinsic rotations about the fixed frame axes. Intrinsic (a, b, c) with
//! angles (α, β, γ) equals extrinsic (c, b, a) with angles (γ, β, α).
//!
//! Extraction follows the direct quaternion-to-Euler method of Bernardes &
//! Viollet, which covers every sequence without per-convention case tables.
//! Near the sequence's singularity (gimbal lock) the decomposition is not
//! unique; the third angle is set to zero, the full rotation folded into
//! the first, and a lock indicator returned alongside the angles.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::SpatialError;
use crate::rotation::Quaternion;
use crate::scalar::Scalar;

/// Middle-angle distance from the singular value below which the
/// decomposition is treated as gimbal-locked (radians).
pub const GIMBAL_LOCK_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    fn from_char(c: char) -> Option<(Axis, bool)> {
        // returns (axis, is_uppercase)
        match c {
            'X' => Some((Axis::X, true)),
            'Y' => Some((Axis::Y, true)),
            'Z' => Some((Axis::Z, true)),
            'x' => Some((Axis::X, false)),
            'y' => Some((Axis::Y, false)),
            'z' => Some((Axis::Z, false)),
            _ => None,
        }
    }

    fn letter(self, intrinsic: bool) -> char {
        let c = match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        };
        if intrinsic {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// One of the 24 Euler conventions: an axis triple (no two consecutive
/// axes equal) plus the intrinsic/extrinsic flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerSeq {
    axes: [Axis; 3],
    intrinsic: bool,
}

impl EulerSeq {
    pub fn new(axes: [Axis; 3], intrinsic: bool) -> Result<Self, SpatialError> {
        if axes[0] == axes[1] || axes[1] == axes[2] {
            let s: String = axes.iter().map(|a| a.letter(intrinsic)).collect();
            return Err(SpatialError::InvalidEulerSequence(s));
        }
        Ok(Self { axes, intrinsic })
    }

    pub fn axes(&self) -> [Axis; 3] {
        self.axes
    }

    pub fn is_intrinsic(&self) -> bool {
        self.intrinsic
    }

    /// All 24 valid conventions, for exhaustive tests.
    pub fn all() -> Vec<EulerSeq> {
        let axes = [Axis::X, Axis::Y, Axis::Z];
        let mut out = Vec::with_capacity(24);
        for &a in &axes {
            for &b in &axes {
                for &c in &axes {
                    if a != b && b != c {
                        for intrinsic in [true, false] {
                            out.push(EulerSeq {
                                axes: [a, b, c],
                                intrinsic,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

impl FromStr for EulerSeq {
    type Err = SpatialError;

    /// Parse `"XYZ"` (intrinsic) or `"xyz"` (extrinsic). Mixed case is
    /// rejected: a sequence is either all body-frame or all fixed-frame.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || SpatialError::InvalidEulerSequence(s.to_string());
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 {
            return Err(invalid());
        }
        let mut axes = [Axis::X; 3];
        let mut cases = [false; 3];
        for (i, &c) in chars.iter().enumerate() {
            let (axis, upper) = Axis::from_char(c).ok_or_else(invalid)?;
            axes[i] = axis;
            cases[i] = upper;
        }
        if cases[0] != cases[1] || cases[1] != cases[2] {
            return Err(invalid());
        }
        EulerSeq::new(axes, cases[0]).map_err(|_| invalid())
    }
}

impl fmt::Display for EulerSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.axes {
            write!(f, "{}", a.letter(self.intrinsic))?;
        }
        Ok(())
    }
}

fn elemental<T: Scalar>(axis: Axis, angle: T) -> Quaternion<T> {
    let half = angle * T::from_f64(0.5);
    let s = half.sin();
    let c = half.cos();
    let z = T::zero();
    match axis {
        Axis::X => Quaternion { x: s, y: z, z, w: c },
        Axis::Y => Quaternion { x: z, y: s, z, w: c },
        Axis::Z => Quaternion { x: z, y: z, z: s, w: c },
    }
}

impl<T: Scalar> Quaternion<T> {
    /// Compose three elemental rotations according to the sequence.
    ///
    /// With `degrees` the angles are interpreted in degrees.
    pub fn from_euler(seq: EulerSeq, angles: [T; 3], degrees: bool) -> Self {
        let to_rad = T::from_f64(PI / 180.0);
        let ang = if degrees {
            [angles[0] * to_rad, angles[1] * to_rad, angles[2] * to_rad]
        } else {
            angles
        };
        let axes = seq.axes();
        let e0 = elemental(axes[0], ang[0]);
        let e1 = elemental(axes[1], ang[1]);
        let e2 = elemental(axes[2], ang[2]);
        if seq.is_intrinsic() {
            e0.compose(&e1).compose(&e2)
        } else {
            e2.compose(&e1).compose(&e0)
        }
    }

    /// Decompose into Euler angles for the given sequence.
    ///
    /// Returns the angles (first/third in (−π, π], middle in the
    /// sequence-dependent range) and a flag that is true when the input is
    /// within [`GIMBAL_LOCK_TOL`] of the sequence's singularity, in which
    /// case the third angle is zero by convention.
    pub fn as_euler(&self, seq: EulerSeq, degrees: bool) -> ([T; 3], bool) {
        let extrinsic = !seq.is_intrinsic();
        let user_axes = seq.axes();

        // Work in the extrinsic frame; intrinsic (a, b, c) is extrinsic
        // (c, b, a) with the angle order reversed.
        let (axes, angle_first, angle_third) = if extrinsic {
            (user_axes, 0usize, 2usize)
        } else {
            ([user_axes[2], user_axes[1], user_axes[0]], 2usize, 0usize)
        };

        let i = axes[0].index();
        let j = axes[1].index();
        let symmetric = axes[0] == axes[2];
        let k = if symmetric {
            3 - i - j
        } else {
            axes[2].index()
        };
        // Even (+1) or odd (-1) permutation of the axis triple.
        let sign_i = [i as isize, j as isize, k as isize];
        let sign = ((sign_i[0] - sign_i[1]) * (sign_i[1] - sign_i[2]) * (sign_i[2] - sign_i[0])
            / 2) as f64;
        let sign_t = T::from_f64(sign);

        let q = self.as_quat();
        let qw = q[3];
        let (a, b, c, d) = if symmetric {
            (qw, q[i], q[j], q[k] * sign_t)
        } else {
            (
                qw - q[j],
                q[i] + q[k] * sign_t,
                q[j] + qw,
                q[k] * sign_t - q[i],
            )
        };

        let hyp_cd = (c * c + d * d).sqrt();
        let hyp_ab = (a * a + b * b).sqrt();
        let middle = T::from_f64(2.0) * hyp_cd.atan2(hyp_ab);

        // 0: regular, 1: middle at 0, 2: middle at π (both singular).
        let case = if middle.value().abs() <= GIMBAL_LOCK_TOL {
            1
        } else if (middle.value() - PI).abs() <= GIMBAL_LOCK_TOL {
            2
        } else {
            0
        };

        let half_sum = b.atan2(a);
        let half_diff = d.atan2(c);

        let mut angles = [T::zero(); 3];
        angles[1] = middle;
        if case == 0 {
            angles[angle_first] = half_sum - half_diff;
            angles[angle_third] = half_sum + half_diff;
        } else {
            // Gimbal lock: fold everything into the user's first angle.
            angles[2] = T::zero();
            if case == 1 {
                angles[0] = T::from_f64(2.0) * half_sum;
            } else {
                let dir = if extrinsic { -1.0 } else { 1.0 };
                angles[0] = T::from_f64(2.0 * dir) * half_diff;
            }
        }

        if !symmetric {
            angles[angle_third] = angles[angle_third] * sign_t;
            angles[1] = angles[1] - T::from_f64(PI / 2.0);
        }

        for angle in &mut angles {
            if angle.value() < -PI {
                *angle = *angle + T::from_f64(2.0 * PI);
            } else if angle.value() > PI {
                *angle = *angle - T::from_f64(2.0 * PI);
            }
        }

        if degrees {
            let to_deg = T::from_f64(180.0 / PI);
            for angle in &mut angles {
                *angle = *angle * to_deg;
            }
        }

        (angles, case != 0)
    }
}
