//! Error type shared by all geometry constructors and batch operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpatialError {
    /// A quaternion with zero norm cannot represent a rotation.
    #[error("zero quaternion")]
    ZeroQuaternion,

    /// Constructor was told the input is already unit but it is not.
    #[error("quaternion norm {norm} departs from 1 by more than {tolerance}")]
    NotUnit { norm: f64, tolerance: f64 },

    /// Input matrix is not close enough to an orthogonal matrix.
    #[error("matrix is not orthogonal: max |R^T R - I| entry = {defect}")]
    NotOrthogonal { defect: f64 },

    /// Orthogonal but reflecting (det <= 0); not a rotation.
    #[error("matrix is singular or reflecting: det = {det}")]
    NonPositiveDeterminant { det: f64 },

    /// Euler sequence string is not one of the 24 valid conventions.
    #[error("invalid euler sequence {0:?}: expected three axes from XYZ (intrinsic) or xyz (extrinsic), no two consecutive equal")]
    InvalidEulerSequence(String),

    /// Homogeneous 4x4 input whose bottom row is not [0, 0, 0, 1].
    #[error("malformed homogeneous matrix: bottom row must be [0, 0, 0, 1] within {tolerance}")]
    MalformedBottomRow { tolerance: f64 },

    /// Batch shapes cannot be broadcast together. The axis is counted from
    /// the trailing side after right-alignment (0 = last axis).
    #[error("cannot broadcast shapes: axis {axis_from_end} (from the end) has extents {left} vs {right}")]
    ShapeMismatch {
        axis_from_end: usize,
        left: usize,
        right: usize,
    },

    /// Element data does not match the declared batch shape.
    #[error("batch length mismatch: shape implies {expected} elements, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
