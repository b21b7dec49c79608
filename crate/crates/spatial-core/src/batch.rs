//! Batched rotations and transforms with array-style broadcasting across
//! arbitrary leading dimensions.
//!
//! Storage is structure-of-arrays: one contiguous lane per quaternion or
//! vector component, in row-major batch order. The contract that pins down
//! every kernel regardless of layout is loop equivalence: the output
//! element at a resolved multi-index equals the scalar operation applied to
//! the resolved operands, bit for bit on the plain-float backend.
//!
//! Shapes broadcast by the standard right-aligned rules: aligned from the
//! trailing side, missing leading dimensions count as 1, and a dimension
//! pair must be equal or contain a 1 (which stretches to the other extent,
//! including 0). `()` is a scalar batch holding one element; `(1,)` is a
//! one-element batch with an axis; they broadcast together but are
//! distinct shapes.

use crate::error::SpatialError;
use crate::matrix::Mat3;
use crate::rotation::Quaternion;
use crate::scalar::Scalar;
use crate::transform::RigidTransform;
use crate::vec3::Vec3;

/// Extents of the leading batch axes. Empty means a scalar batch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchShape(Vec<usize>);

impl BatchShape {
    pub fn new(dims: impl Into<Vec<usize>>) -> Self {
        BatchShape(dims.into())
    }

    /// The shape of a single element with no batch axes.
    pub fn scalar() -> Self {
        BatchShape(Vec::new())
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Number of elements: the product of the extents (1 for a scalar batch).
    pub fn count(&self) -> usize {
        self.0.iter().product()
    }
}

impl From<&[usize]> for BatchShape {
    fn from(dims: &[usize]) -> Self {
        BatchShape(dims.to_vec())
    }
}

/// Broadcast two shapes: right-align, pad with 1, stretch size-1 axes.
pub fn broadcast_shapes(a: &BatchShape, b: &BatchShape) -> Result<BatchShape, SpatialError> {
    let rank = a.rank().max(b.rank());
    let mut dims = vec![0usize; rank];
    for axis_from_end in 0..rank {
        let da = if axis_from_end < a.rank() {
            a.0[a.rank() - 1 - axis_from_end]
        } else {
            1
        };
        let db = if axis_from_end < b.rank() {
            b.0[b.rank() - 1 - axis_from_end]
        } else {
            1
        };
        let out = if da == db {
            da
        } else if da == 1 {
            db
        } else if db == 1 {
            da
        } else {
            return Err(SpatialError::ShapeMismatch {
                axis_from_end,
                left: da,
                right: db,
            });
        };
        dims[rank - 1 - axis_from_end] = out;
    }
    Ok(BatchShape(dims))
}

/// Maps flat output indices to flat source indices for one operand of a
/// broadcast operation. Stretched axes get stride zero.
struct BroadcastIndexer {
    out_dims: Vec<usize>,
    strides: Vec<usize>,
}

impl BroadcastIndexer {
    fn new(src: &BatchShape, out: &BatchShape) -> Self {
        let rank = out.rank();
        let mut strides = vec![0usize; rank];
        // Row-major strides of the source, right-aligned to the out rank.
        let mut src_stride = 1usize;
        for axis_from_end in 0..rank {
            if axis_from_end < src.rank() {
                let extent = src.0[src.rank() - 1 - axis_from_end];
                strides[rank - 1 - axis_from_end] = if extent == 1 { 0 } else { src_stride };
                src_stride *= extent;
            }
        }
        BroadcastIndexer {
            out_dims: out.0.clone(),
            strides,
        }
    }

    fn src_index(&self, mut out_flat: usize) -> usize {
        let mut idx = 0usize;
        for axis in (0..self.out_dims.len()).rev() {
            let extent = self.out_dims[axis];
            let coord = out_flat % extent;
            out_flat /= extent;
            idx += coord * self.strides[axis];
        }
        idx
    }
}

/// Resolve the element pairing of a broadcast binary operation and invoke
/// `f(out_flat, a_flat, b_flat)` for every output element.
fn for_each_pair<F: FnMut(usize, usize, usize)>(
    a: &BatchShape,
    b: &BatchShape,
    out: &BatchShape,
    mut f: F,
) {
    let n = out.count();
    if a == b {
        for i in 0..n {
            f(i, i, i);
        }
        return;
    }
    let ia = BroadcastIndexer::new(a, out);
    let ib = BroadcastIndexer::new(b, out);
    for i in 0..n {
        f(i, ia.src_index(i), ib.src_index(i));
    }
}

/// Batch of 3-vectors in structure-of-arrays layout. The trailing length-3
/// axis is part of the element type and never participates in broadcasting.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec3Batch<T> {
    shape: BatchShape,
    x: Vec<T>,
    y: Vec<T>,
    z: Vec<T>,
}

impl<T: Scalar> Vec3Batch<T> {
    pub fn from_vectors(shape: BatchShape, elements: &[Vec3<T>]) -> Result<Self, SpatialError> {
        if elements.len() != shape.count() {
            return Err(SpatialError::LengthMismatch {
                expected: shape.count(),
                got: elements.len(),
            });
        }
        Ok(Self {
            shape,
            x: elements.iter().map(|v| v[0]).collect(),
            y: elements.iter().map(|v| v[1]).collect(),
            z: elements.iter().map(|v| v[2]).collect(),
        })
    }

    pub fn shape(&self) -> &BatchShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn get(&self, flat: usize) -> Vec3<T> {
        [self.x[flat], self.y[flat], self.z[flat]]
    }

    pub fn to_vectors(&self) -> Vec<Vec3<T>> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Build directly from component lanes (the public SoA layout).
    pub fn from_lanes(
        shape: BatchShape,
        x: Vec<T>,
        y: Vec<T>,
        z: Vec<T>,
    ) -> Result<Self, SpatialError> {
        let n = shape.count();
        for lane in [&x, &y, &z] {
            if lane.len() != n {
                return Err(SpatialError::LengthMismatch {
                    expected: n,
                    got: lane.len(),
                });
            }
        }
        Ok(Self { shape, x, y, z })
    }

    /// Component lanes `(x, y, z)` in row-major batch order.
    pub fn lanes(&self) -> (&[T], &[T], &[T]) {
        (&self.x, &self.y, &self.z)
    }
}

/// Batch of rotations in structure-of-arrays layout (four component lanes).
#[derive(Debug, Clone, PartialEq)]
pub struct RotationBatch<T> {
    shape: BatchShape,
    x: Vec<T>,
    y: Vec<T>,
    z: Vec<T>,
    w: Vec<T>,
}

impl<T: Scalar> RotationBatch<T> {
    pub fn from_quaternions(
        shape: BatchShape,
        elements: &[Quaternion<T>],
    ) -> Result<Self, SpatialError> {
        if elements.len() != shape.count() {
            return Err(SpatialError::LengthMismatch {
                expected: shape.count(),
                got: elements.len(),
            });
        }
        Ok(Self {
            shape,
            x: elements.iter().map(|q| q.x).collect(),
            y: elements.iter().map(|q| q.y).collect(),
            z: elements.iter().map(|q| q.z).collect(),
            w: elements.iter().map(|q| q.w).collect(),
        })
    }

    /// Build directly from component lanes (the public SoA layout).
    pub fn from_lanes(
        shape: BatchShape,
        x: Vec<T>,
        y: Vec<T>,
        z: Vec<T>,
        w: Vec<T>,
    ) -> Result<Self, SpatialError> {
        let n = shape.count();
        for lane in [&x, &y, &z, &w] {
            if lane.len() != n {
                return Err(SpatialError::LengthMismatch {
                    expected: n,
                    got: lane.len(),
                });
            }
        }
        Ok(Self { shape, x, y, z, w })
    }

    /// Elementwise exponential map over a batch of rotation vectors.
    pub fn from_rotvecs(v: &Vec3Batch<T>) -> Self {
        let n = v.len();
        let mut out = Self::with_capacity(v.shape.clone(), n);
        for i in 0..n {
            out.push(Quaternion::from_rotvec(v.get(i)));
        }
        out
    }

    fn with_capacity(shape: BatchShape, n: usize) -> Self {
        Self {
            shape,
            x: Vec::with_capacity(n),
            y: Vec::with_capacity(n),
            z: Vec::with_capacity(n),
            w: Vec::with_capacity(n),
        }
    }

    fn push(&mut self, q: Quaternion<T>) {
        self.x.push(q.x);
        self.y.push(q.y);
        self.z.push(q.z);
        self.w.push(q.w);
    }

    pub fn shape(&self) -> &BatchShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn get(&self, flat: usize) -> Quaternion<T> {
        Quaternion {
            x: self.x[flat],
            y: self.y[flat],
            z: self.z[flat],
            w: self.w[flat],
        }
    }

    pub fn to_quaternions(&self) -> Vec<Quaternion<T>> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Component lanes `(x, y, z, w)` in row-major batch order.
    pub fn lanes(&self) -> (&[T], &[T], &[T], &[T]) {
        (&self.x, &self.y, &self.z, &self.w)
    }

    /// Broadcasting composition; each output element is the scalar
    /// `compose` of the resolved operands.
    ///
    /// Equal shapes take a lane-zipped kernel with no per-element index
    /// resolution; the result is bit-identical to the general path.
    pub fn compose(&self, other: &Self) -> Result<Self, SpatialError> {
        if self.shape == other.shape {
            return Ok(self.compose_same_shape(other));
        }
        let out_shape = broadcast_shapes(&self.shape, &other.shape)?;
        let n = out_shape.count();
        let mut out = Self::with_capacity(out_shape.clone(), n);
        for_each_pair(&self.shape, &other.shape, &out_shape, |_, ia, ib| {
            out.push(self.get(ia).compose(&other.get(ib)));
        });
        Ok(out)
    }

    fn compose_same_shape(&self, other: &Self) -> Self {
        let n = self.x.len();
        let (ax, ay, az, aw) = (&self.x[..n], &self.y[..n], &self.z[..n], &self.w[..n]);
        let (bx, by, bz, bw) = (&other.x[..n], &other.y[..n], &other.z[..n], &other.w[..n]);
        let mut out = Self::with_capacity(self.shape.clone(), n);
        for i in 0..n {
            let a = Quaternion {
                x: ax[i],
                y: ay[i],
                z: az[i],
                w: aw[i],
            };
            let b = Quaternion {
                x: bx[i],
                y: by[i],
                z: bz[i],
                w: bw[i],
            };
            out.push(a.compose(&b));
        }
        out
    }

    /// Broadcasting application to a batch of vectors.
    pub fn apply(&self, v: &Vec3Batch<T>) -> Result<Vec3Batch<T>, SpatialError> {
        if self.shape == v.shape {
            return Ok(self.apply_same_shape(v));
        }
        let out_shape = broadcast_shapes(&self.shape, &v.shape)?;
        let n = out_shape.count();
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        let mut z = Vec::with_capacity(n);
        for_each_pair(&self.shape, &v.shape, &out_shape, |_, ia, ib| {
            let r = self.get(ia).apply(v.get(ib));
            x.push(r[0]);
            y.push(r[1]);
            z.push(r[2]);
        });
        Ok(Vec3Batch {
            shape: out_shape,
            x,
            y,
            z,
        })
    }

    fn apply_same_shape(&self, v: &Vec3Batch<T>) -> Vec3Batch<T> {
        let n = self.x.len();
        let (qx, qy, qz, qw) = (&self.x[..n], &self.y[..n], &self.z[..n], &self.w[..n]);
        let (vx, vy, vz) = (&v.x[..n], &v.y[..n], &v.z[..n]);
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        let mut z = Vec::with_capacity(n);
        for i in 0..n {
            let q = Quaternion {
                x: qx[i],
                y: qy[i],
                z: qz[i],
                w: qw[i],
            };
            let r = q.apply([vx[i], vy[i], vz[i]]);
            x.push(r[0]);
            y.push(r[1]);
            z.push(r[2]);
        }
        Vec3Batch {
            shape: self.shape.clone(),
            x,
            y,
            z,
        }
    }

    /// Elementwise inverse.
    pub fn inverse(&self) -> Self {
        let mut out = Self::with_capacity(self.shape.clone(), self.len());
        for i in 0..self.len() {
            out.push(self.get(i).inverse());
        }
        out
    }

    /// Elementwise logarithm map.
    pub fn as_rotvecs(&self) -> Vec3Batch<T> {
        let n = self.len();
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        let mut z = Vec::with_capacity(n);
        for i in 0..n {
            let v = self.get(i).as_rotvec();
            x.push(v[0]);
            y.push(v[1]);
            z.push(v[2]);
        }
        Vec3Batch {
            shape: self.shape.clone(),
            x,
            y,
            z,
        }
    }

    /// Elementwise matrix conversion (trailing 3x3 element axes).
    pub fn as_matrices(&self) -> Mat3Batch<T> {
        Mat3Batch {
            shape: self.shape.clone(),
            mats: (0..self.len()).map(|i| self.get(i).as_matrix()).collect(),
        }
    }
}

/// Batch of 3x3 matrices (output of [`RotationBatch::as_matrices`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3Batch<T> {
    shape: BatchShape,
    mats: Vec<Mat3<T>>,
}

impl<T: Scalar> Mat3Batch<T> {
    pub fn shape(&self) -> &BatchShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, flat: usize) -> &Mat3<T> {
        &self.mats[flat]
    }
}

fn add_same_shape<T: Scalar>(a: &Vec3Batch<T>, b: &Vec3Batch<T>) -> Vec3Batch<T> {
    let n = a.x.len();
    let (ax, ay, az) = (&a.x[..n], &a.y[..n], &a.z[..n]);
    let (bx, by, bz) = (&b.x[..n], &b.y[..n], &b.z[..n]);
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut z = Vec::with_capacity(n);
    for i in 0..n {
        x.push(ax[i] + bx[i]);
        y.push(ay[i] + by[i]);
        z.push(az[i] + bz[i]);
    }
    Vec3Batch {
        shape: a.shape.clone(),
        x,
        y,
        z,
    }
}

/// Batch of rigid transforms: rotation lanes plus translation lanes.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformBatch<T> {
    rotations: RotationBatch<T>,
    translations: Vec3Batch<T>,
}

impl<T: Scalar> TransformBatch<T> {
    pub fn from_transforms(
        shape: BatchShape,
        elements: &[RigidTransform<T>],
    ) -> Result<Self, SpatialError> {
        let rotations: Vec<Quaternion<T>> = elements.iter().map(|t| t.rotation).collect();
        let translations: Vec<Vec3<T>> = elements.iter().map(|t| t.translation).collect();
        Ok(Self {
            rotations: RotationBatch::from_quaternions(shape.clone(), &rotations)?,
            translations: Vec3Batch::from_vectors(shape, &translations)?,
        })
    }

    /// Assemble from separately built rotation and translation batches of
    /// identical shape.
    pub fn from_parts(
        rotations: RotationBatch<T>,
        translations: Vec3Batch<T>,
    ) -> Result<Self, SpatialError> {
        if rotations.shape() != translations.shape() {
            return Err(SpatialError::LengthMismatch {
                expected: rotations.len(),
                got: translations.len(),
            });
        }
        Ok(Self {
            rotations,
            translations,
        })
    }

    /// The rotation and translation halves of the SoA layout.
    pub fn parts(&self) -> (&RotationBatch<T>, &Vec3Batch<T>) {
        (&self.rotations, &self.translations)
    }

    pub fn shape(&self) -> &BatchShape {
        self.rotations.shape()
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    pub fn get(&self, flat: usize) -> RigidTransform<T> {
        RigidTransform {
            rotation: self.rotations.get(flat),
            translation: self.translations.get(flat),
        }
    }

    pub fn to_transforms(&self) -> Vec<RigidTransform<T>> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Broadcasting composition of rigid motions. Equal shapes use the
    /// lane-zipped kernels; the result is bit-identical either way.
    pub fn compose(&self, other: &Self) -> Result<Self, SpatialError> {
        if self.shape() == other.shape() {
            let rotations = self.rotations.compose_same_shape(&other.rotations);
            let rotated = self.rotations.apply_same_shape(&other.translations);
            let translations = add_same_shape(&rotated, &self.translations);
            return Ok(Self {
                rotations,
                translations,
            });
        }
        let out_shape = broadcast_shapes(self.shape(), other.shape())?;
        let n = out_shape.count();
        let mut elements = Vec::with_capacity(n);
        for_each_pair(self.shape(), other.shape(), &out_shape, |_, ia, ib| {
            elements.push(self.get(ia).compose(&other.get(ib)));
        });
        Self::from_transforms(out_shape, &elements)
    }

    /// Broadcasting application to a batch of points.
    pub fn apply(&self, p: &Vec3Batch<T>) -> Result<Vec3Batch<T>, SpatialError> {
        if self.shape() == &p.shape {
            let rotated = self.rotations.apply_same_shape(p);
            return Ok(add_same_shape(&rotated, &self.translations));
        }
        let out_shape = broadcast_shapes(self.shape(), &p.shape)?;
        let n = out_shape.count();
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        let mut z = Vec::with_capacity(n);
        for_each_pair(self.shape(), &p.shape, &out_shape, |_, ia, ib| {
            let r = self.get(ia).apply(p.get(ib));
            x.push(r[0]);
            y.push(r[1]);
            z.push(r[2]);
        });
        Ok(Vec3Batch {
            shape: out_shape,
            x,
            y,
            z,
        })
    }

    /// Elementwise inverse.
    pub fn inverse(&self) -> Self {
        let elements: Vec<RigidTransform<T>> =
            (0..self.len()).map(|i| self.get(i).inverse()).collect();
        Self::from_transforms(self.shape().clone(), &elements)
            .expect("shape unchanged by elementwise inverse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broadcast_shapes_standard_cases() {
        let s = |d: &[usize]| BatchShape::new(d.to_vec());
        assert_eq!(broadcast_shapes(&s(&[2, 3]), &s(&[3])).unwrap(), s(&[2, 3]));
        assert_eq!(broadcast_shapes(&s(&[]), &s(&[5])).unwrap(), s(&[5]));
        assert_eq!(
            broadcast_shapes(&s(&[2, 1]), &s(&[1, 3])).unwrap(),
            s(&[2, 3])
        );
        assert_eq!(broadcast_shapes(&s(&[]), &s(&[])).unwrap(), s(&[]));
        assert_eq!(broadcast_shapes(&s(&[0]), &s(&[1])).unwrap(), s(&[0]));
    }

    #[test]
    fn broadcast_shapes_error_names_axis() {
        let a = BatchShape::new(vec![2, 3]);
        let b = BatchShape::new(vec![4]);
        match broadcast_shapes(&a, &b) {
            Err(SpatialError::ShapeMismatch {
                axis_from_end,
                left,
                right,
            }) => {
                assert_eq!(axis_from_end, 0);
                assert_eq!((left, right), (3, 4));
            }
            other => panic!("expected shape error, got {other:?}"),
        }
    }

    #[test]
    fn shape_algebra() {
        let s = |d: &[usize]| BatchShape::new(d.to_vec());
        let pairs = [
            (s(&[2, 1]), s(&[1, 3])),
            (s(&[]), s(&[4])),
            (s(&[5, 1, 2]), s(&[3, 1])),
        ];
        for (a, b) in &pairs {
            // commutative
            assert_eq!(
                broadcast_shapes(a, b).unwrap(),
                broadcast_shapes(b, a).unwrap()
            );
        }
        // idempotent on equal shapes
        let a = s(&[2, 3, 4]);
        assert_eq!(broadcast_shapes(&a, &a).unwrap(), a);
        // associative
        let (x, y, z) = (s(&[2, 1, 1]), s(&[1, 3, 1]), s(&[1, 1, 4]));
        let left = broadcast_shapes(&broadcast_shapes(&x, &y).unwrap(), &z).unwrap();
        let right = broadcast_shapes(&x, &broadcast_shapes(&y, &z).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn scalar_and_one_element_batches_are_distinct() {
        let q = Quaternion::<f64>::from_rotvec([0.1, 0.2, 0.3]);
        let scalar = RotationBatch::from_quaternions(BatchShape::scalar(), &[q]).unwrap();
        let one = RotationBatch::from_quaternions(BatchShape::new(vec![1]), &[q]).unwrap();
        assert_ne!(scalar.shape(), one.shape());
        let composed = scalar.compose(&one).unwrap();
        assert_eq!(composed.shape(), &BatchShape::new(vec![1]));
    }

    #[test]
    fn compose_matches_scalar_loop_with_broadcast() {
        let qa: Vec<Quaternion<f64>> = (0..2)
            .map(|i| Quaternion::from_rotvec([0.1 * i as f64, 0.2, -0.3]))
            .collect();
        let qb: Vec<Quaternion<f64>> = (0..3)
            .map(|i| Quaternion::from_rotvec([0.4, -0.1 * i as f64, 0.2]))
            .collect();
        let a = RotationBatch::from_quaternions(BatchShape::new(vec![2, 1]), &qa).unwrap();
        let b = RotationBatch::from_quaternions(BatchShape::new(vec![1, 3]), &qb).unwrap();
        let out = a.compose(&b).unwrap();
        assert_eq!(out.shape(), &BatchShape::new(vec![2, 3]));
        for i in 0..2 {
            for j in 0..3 {
                let expect = qa[i].compose(&qb[j]);
                let got = out.get(i * 3 + j);
                assert_eq!(got.as_quat(), expect.as_quat(), "({i},{j})");
            }
        }
    }

    #[test]
    fn apply_fans_out() {
        let q = Quaternion::<f64>::from_rotvec([0.0, 0.0, 0.7]);
        let r = RotationBatch::from_quaternions(BatchShape::scalar(), &[q]).unwrap();
        let vs: Vec<Vec3<f64>> = (0..100).map(|i| [i as f64, 1.0, -2.0]).collect();
        let v = Vec3Batch::from_vectors(BatchShape::new(vec![100]), &vs).unwrap();
        let out = r.apply(&v).unwrap();
        assert_eq!(out.shape(), &BatchShape::new(vec![100]));
        for i in 0..100 {
            assert_eq!(out.get(i), q.apply(vs[i]));
        }
    }

    #[test]
    fn empty_batches_propagate() {
        let empty = RotationBatch::<f64>::from_quaternions(BatchShape::new(vec![0]), &[]).unwrap();
        let composed = empty.compose(&empty).unwrap();
        assert_eq!(composed.len(), 0);
        assert!(composed.as_rotvecs().is_empty());
        assert!(composed.as_matrices().is_empty());
        assert!(composed.inverse().is_empty());
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let q = Quaternion::<f64>::identity();
        assert!(matches!(
            RotationBatch::from_quaternions(BatchShape::new(vec![2]), &[q]),
            Err(SpatialError::LengthMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn transform_batch_round_trip() {
        let ts: Vec<RigidTransform<f64>> = (0..4)
            .map(|i| {
                RigidTransform::from_components(
                    Quaternion::from_rotvec([0.1 * i as f64, 0.2, 0.3]),
                    [i as f64, 0.0, 1.0],
                )
            })
            .collect();
        let batch = TransformBatch::from_transforms(BatchShape::new(vec![4]), &ts).unwrap();
        for (i, t) in ts.iter().enumerate() {
            assert_eq!(batch.get(i), *t);
        }
        let inv = batch.inverse();
        for i in 0..4 {
            assert_eq!(inv.get(i), ts[i].inverse());
        }
    }
}
