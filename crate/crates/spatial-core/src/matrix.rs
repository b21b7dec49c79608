//! Small fixed-size matrices used for rotation and homogeneous-transform
//! import/export. Row-major storage.

use std::ops::{Index, IndexMut, Mul};

use crate::scalar::Scalar;
use crate::vec3::Vec3;

/// 3x3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<T>(pub [[T; 3]; 3]);

impl<T: Scalar> Mat3<T> {
    pub fn identity() -> Self {
        let o = T::one();
        let z = T::zero();
        Mat3([[o, z, z], [z, o, z], [z, z, o]])
    }

    pub fn from_rows(rows: [[T; 3]; 3]) -> Self {
        Mat3(rows)
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn det(&self) -> T {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse by the adjugate formula. The caller guarantees a nonzero
    /// determinant (used for inertia matrices validated at construction).
    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        let c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
        let c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        let c10 = m[0][2] * m[2][1] - m[0][1] * m[2][2];
        let c11 = m[0][0] * m[2][2] - m[0][2] * m[2][0];
        let c12 = m[0][1] * m[2][0] - m[0][0] * m[2][1];
        let c20 = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        let c21 = m[0][2] * m[1][0] - m[0][0] * m[1][2];
        let c22 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let inv_det = T::one() / self.det();
        Mat3([
            [c00 * inv_det, c10 * inv_det, c20 * inv_det],
            [c01 * inv_det, c11 * inv_det, c21 * inv_det],
            [c02 * inv_det, c12 * inv_det, c22 * inv_det],
        ])
    }

    pub fn mul_vec(&self, v: Vec3<T>) -> Vec3<T> {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn from_f64(m: &Mat3<f64>) -> Self {
        let mut out = Mat3::identity();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = T::from_f64(m.0[i][j]);
            }
        }
        out
    }

    pub fn value(&self) -> Mat3<f64> {
        let mut out = Mat3::<f64>::identity();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[i][j].value();
            }
        }
        out
    }
}

impl<T: Scalar> Mul for Mat3<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.0[i][0] * rhs.0[0][j]
                    + self.0[i][1] * rhs.0[1][j]
                    + self.0[i][2] * rhs.0[2][j];
            }
        }
        Mat3(out)
    }
}

impl<T> Index<(usize, usize)> for Mat3<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.0[i][j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat3<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.0[i][j]
    }
}

/// 4x4 homogeneous matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

impl<T: Scalar> Mat4<T> {
    pub fn identity() -> Self {
        let o = T::one();
        let z = T::zero();
        Mat4([
            [o, z, z, z],
            [z, o, z, z],
            [z, z, o, z],
            [z, z, z, o],
        ])
    }

    pub fn rotation_block(&self) -> Mat3<T> {
        let m = &self.0;
        Mat3([
            [m[0][0], m[0][1], m[0][2]],
            [m[1][0], m[1][1], m[1][2]],
            [m[2][0], m[2][1], m[2][2]],
        ])
    }

    pub fn translation(&self) -> Vec3<T> {
        [self.0[0][3], self.0[1][3], self.0[2][3]]
    }
}

impl<T: Scalar> Mul for Mat4<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [[T::zero(); 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut acc = T::zero();
                for k in 0..4 {
                    acc = acc + self.0[i][k] * rhs.0[k][j];
                }
                *entry = acc;
            }
        }
        Mat4(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_original_is_identity() {
        let m = Mat3([[2.0, 1.0, 0.5], [-1.0, 3.0, 0.0], [0.2, 0.1, 1.5]]);
        let p = m * m.inverse();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((p[(i, j)] - expected).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn det_of_scaled_identity() {
        let mut m = Mat3::<f64>::identity();
        m[(0, 0)] = 2.0;
        m[(1, 1)] = 3.0;
        m[(2, 2)] = 4.0;
        assert_eq!(m.det(), 24.0);
    }

    #[test]
    fn mat4_block_accessors() {
        let mut m = Mat4::<f64>::identity();
        m.0[0][3] = 1.0;
        m.0[1][3] = 2.0;
        m.0[2][3] = 3.0;
        assert_eq!(m.translation(), [1.0, 2.0, 3.0]);
        assert_eq!(m.rotation_block(), Mat3::identity());
    }
}
