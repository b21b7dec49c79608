//! SE(3) rigid transforms: a rotation plus a translation.
//!
//! Stored as (quaternion, translation) rather than the 4x4 matrix:
//! composition and differentiation are cheaper and drift-free on the
//! quaternion. The homogeneous matrix is the import/export format, with
//! identical observable semantics.

use crate::error::SpatialError;
use crate::matrix::Mat4;
use crate::rotation::Quaternion;
use crate::scalar::Scalar;
use crate::vec3::{self, Vec3};

/// Tolerance on the bottom row of an imported homogeneous matrix.
const BOTTOM_ROW_TOL: f64 = 1e-9;

/// Rigid motion `p ↦ R p + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidTransform<T> {
    pub rotation: Quaternion<T>,
    pub translation: Vec3<T>,
}

impl<T: Scalar> RigidTransform<T> {
    #[inline]
    pub fn identity() -> Self {
        Self {
            rotation: Quaternion::identity(),
            translation: vec3::zero(),
        }
    }

    /// Assemble from a rotation and a translation.
    #[inline]
    pub fn from_components(rotation: Quaternion<T>, translation: Vec3<T>) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    /// Import a homogeneous 4x4 matrix. The bottom row must be
    /// [0, 0, 0, 1] within 1e-9 and the rotation block must pass
    /// [`Quaternion::from_matrix`].
    pub fn from_matrix(m: &Mat4<T>) -> Result<Self, SpatialError> {
        let row = [
            m.0[3][0].value(),
            m.0[3][1].value(),
            m.0[3][2].value(),
            m.0[3][3].value(),
        ];
        let ok = row[0].abs() <= BOTTOM_ROW_TOL
            && row[1].abs() <= BOTTOM_ROW_TOL
            && row[2].abs() <= BOTTOM_ROW_TOL
            && (row[3] - 1.0).abs() <= BOTTOM_ROW_TOL;
        if !ok {
            return Err(SpatialError::MalformedBottomRow {
                tolerance: BOTTOM_ROW_TOL,
            });
        }
        Ok(Self {
            rotation: Quaternion::from_matrix(&m.rotation_block())?,
            translation: m.translation(),
        })
    }

    /// Export as `[[R, t], [0, 0, 0, 1]]`.
    pub fn as_matrix(&self) -> Mat4<T> {
        let r = self.rotation.as_matrix();
        let t = self.translation;
        let z = T::zero();
        Mat4([
            [r[(0, 0)], r[(0, 1)], r[(0, 2)], t[0]],
            [r[(1, 0)], r[(1, 1)], r[(1, 2)], t[1]],
            [r[(2, 0)], r[(2, 1)], r[(2, 2)], t[2]],
            [z, z, z, T::one()],
        ])
    }

    /// Composition: `(self ∘ other)(p) = self(other(p))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            rotation: self.rotation.compose(&other.rotation),
            translation: vec3::add(self.rotation.apply(other.translation), self.translation),
        }
    }

    /// Inverse motion: rotation conjugated, translation `-R⁻¹ t`.
    pub fn inverse(&self) -> Self {
        let inv_rot = self.rotation.inverse();
        Self {
            rotation: inv_rot,
            translation: vec3::neg(inv_rot.apply(self.translation)),
        }
    }

    /// Apply to a point: `R p + t`.
    #[inline]
    pub fn apply(&self, p: Vec3<T>) -> Vec3<T> {
        vec3::add(self.rotation.apply(p), self.translation)
    }

    /// Apply the inverse motion: `R⁻¹ (p − t)`.
    #[inline]
    pub fn apply_inverse(&self, p: Vec3<T>) -> Vec3<T> {
        self.rotation.apply_inverse(vec3::sub(p, self.translation))
    }
}
