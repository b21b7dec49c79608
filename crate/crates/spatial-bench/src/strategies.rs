//! The three execution strategies per operation.
//!
//! Every strategy evaluates the same per-element scalar operation, so
//! outputs are bit-identical; what varies is storage layout and whether
//! the elementwise loop runs on one thread or across a rayon pool.
//! The parallel kernels write the structure-of-arrays lanes directly in
//! disjoint chunks, so the result is independent of the partitioning.

use rayon::prelude::*;
use spatial_core::{
    BatchShape, Quaternion, RigidTransform, RotationBatch, TransformBatch, Vec3, Vec3Batch,
};

use crate::inputs;
use crate::{Operation, Strategy};

/// Elements per parallel work unit.
const CHUNK: usize = 16 * 1024;

/// Inputs for one (operation, N) cell in both layouts, built before any
/// timing starts.
pub(crate) enum Prepared {
    RotationCompose {
        a: Vec<Quaternion<f64>>,
        b: Vec<Quaternion<f64>>,
        a_soa: RotationBatch<f64>,
        b_soa: RotationBatch<f64>,
    },
    RotationApply {
        r: Vec<Quaternion<f64>>,
        v: Vec<Vec3<f64>>,
        r_soa: RotationBatch<f64>,
        v_soa: Vec3Batch<f64>,
    },
    TransformCompose {
        a: Vec<RigidTransform<f64>>,
        b: Vec<RigidTransform<f64>>,
        a_soa: TransformBatch<f64>,
        b_soa: TransformBatch<f64>,
    },
    TransformApply {
        t: Vec<RigidTransform<f64>>,
        p: Vec<Vec3<f64>>,
        t_soa: TransformBatch<f64>,
        p_soa: Vec3Batch<f64>,
    },
}

/// Output of one strategy run; layout depends on the strategy.
pub(crate) enum Output {
    Rotations(Vec<Quaternion<f64>>),
    RotationSoa(RotationBatch<f64>),
    Vectors(Vec<Vec3<f64>>),
    VectorSoa(Vec3Batch<f64>),
    Transforms(Vec<RigidTransform<f64>>),
    TransformSoa(TransformBatch<f64>),
}

pub(crate) fn prepare(op: Operation, n: usize, seed: u64) -> Prepared {
    let mut rng = inputs::stream(seed, op, n);
    let shape = BatchShape::new(vec![n]);
    match op {
        Operation::RotationCompose => {
            let a: Vec<_> = (0..n).map(|_| inputs::rotation(&mut rng)).collect();
            let b: Vec<_> = (0..n).map(|_| inputs::rotation(&mut rng)).collect();
            let a_soa = RotationBatch::from_quaternions(shape.clone(), &a).unwrap();
            let b_soa = RotationBatch::from_quaternions(shape, &b).unwrap();
            Prepared::RotationCompose { a, b, a_soa, b_soa }
        }
        Operation::RotationApply => {
            let r: Vec<_> = (0..n).map(|_| inputs::rotation(&mut rng)).collect();
            let v: Vec<_> = (0..n).map(|_| inputs::vector(&mut rng)).collect();
            let r_soa = RotationBatch::from_quaternions(shape.clone(), &r).unwrap();
            let v_soa = Vec3Batch::from_vectors(shape, &v).unwrap();
            Prepared::RotationApply { r, v, r_soa, v_soa }
        }
        Operation::TransformCompose => {
            let a: Vec<_> = (0..n).map(|_| inputs::transform(&mut rng)).collect();
            let b: Vec<_> = (0..n).map(|_| inputs::transform(&mut rng)).collect();
            let a_soa = TransformBatch::from_transforms(shape.clone(), &a).unwrap();
            let b_soa = TransformBatch::from_transforms(shape, &b).unwrap();
            Prepared::TransformCompose { a, b, a_soa, b_soa }
        }
        Operation::TransformApply => {
            let t: Vec<_> = (0..n).map(|_| inputs::transform(&mut rng)).collect();
            let p: Vec<_> = (0..n).map(|_| inputs::vector(&mut rng)).collect();
            let t_soa = TransformBatch::from_transforms(shape.clone(), &t).unwrap();
            let p_soa = Vec3Batch::from_vectors(shape, &p).unwrap();
            Prepared::TransformApply { t, p, t_soa, p_soa }
        }
    }
}

impl Prepared {
    pub(crate) fn run(&self, strategy: Strategy) -> Output {
        match (self, strategy) {
            (Prepared::RotationCompose { a, b, .. }, Strategy::ScalarLoop) => {
                Output::Rotations(a.iter().zip(b).map(|(x, y)| x.compose(y)).collect())
            }
            (Prepared::RotationCompose { a_soa, b_soa, .. }, Strategy::Batch) => {
                Output::RotationSoa(a_soa.compose(b_soa).unwrap())
            }
            (Prepared::RotationCompose { a_soa, b_soa, .. }, Strategy::ParallelBatch) => {
                Output::RotationSoa(par_rotation_compose(a_soa, b_soa))
            }

            (Prepared::RotationApply { r, v, .. }, Strategy::ScalarLoop) => {
                Output::Vectors(r.iter().zip(v).map(|(q, x)| q.apply(*x)).collect())
            }
            (Prepared::RotationApply { r_soa, v_soa, .. }, Strategy::Batch) => {
                Output::VectorSoa(r_soa.apply(v_soa).unwrap())
            }
            (Prepared::RotationApply { r_soa, v_soa, .. }, Strategy::ParallelBatch) => {
                Output::VectorSoa(par_rotation_apply(r_soa, v_soa))
            }

            (Prepared::TransformCompose { a, b, .. }, Strategy::ScalarLoop) => {
                Output::Transforms(a.iter().zip(b).map(|(x, y)| x.compose(y)).collect())
            }
            (Prepared::TransformCompose { a_soa, b_soa, .. }, Strategy::Batch) => {
                Output::TransformSoa(a_soa.compose(b_soa).unwrap())
            }
            (Prepared::TransformCompose { a_soa, b_soa, .. }, Strategy::ParallelBatch) => {
                Output::TransformSoa(par_transform_compose(a_soa, b_soa))
            }

            (Prepared::TransformApply { t, p, .. }, Strategy::ScalarLoop) => {
                Output::Vectors(t.iter().zip(p).map(|(tf, x)| tf.apply(*x)).collect())
            }
            (Prepared::TransformApply { t_soa, p_soa, .. }, Strategy::Batch) => {
                Output::VectorSoa(t_soa.apply(p_soa).unwrap())
            }
            (Prepared::TransformApply { t_soa, p_soa, .. }, Strategy::ParallelBatch) => {
                Output::VectorSoa(par_transform_apply(t_soa, p_soa))
            }
        }
    }
}

/// Split three lanes into equal chunk triples for rayon. Slicing the
/// inputs to the chunk bounds up front lets the inner loops run without
/// per-element bounds checks, which is the whole point of this strategy.
fn chunks3<'a>(
    x: &'a mut [f64],
    y: &'a mut [f64],
    z: &'a mut [f64],
) -> Vec<((&'a mut [f64], &'a mut [f64]), &'a mut [f64])> {
    x.chunks_mut(CHUNK)
        .zip(y.chunks_mut(CHUNK))
        .zip(z.chunks_mut(CHUNK))
        .collect()
}

fn par_rotation_compose(a: &RotationBatch<f64>, b: &RotationBatch<f64>) -> RotationBatch<f64> {
    let n = a.len();
    let (ax, ay, az, aw) = a.lanes();
    let (bx, by, bz, bw) = b.lanes();
    let mut ox = vec![0.0; n];
    let mut oy = vec![0.0; n];
    let mut oz = vec![0.0; n];
    let mut ow = vec![0.0; n];
    let chunks: Vec<_> = ox
        .chunks_mut(CHUNK)
        .zip(oy.chunks_mut(CHUNK))
        .zip(oz.chunks_mut(CHUNK))
        .zip(ow.chunks_mut(CHUNK))
        .collect();
    chunks
        .into_par_iter()
        .enumerate()
        .for_each(|(ci, (((cx, cy), cz), cw))| {
            let base = ci * CHUNK;
            let len = cx.len();
            let (ax, ay, az, aw) = (
                &ax[base..base + len],
                &ay[base..base + len],
                &az[base..base + len],
                &aw[base..base + len],
            );
            let (bx, by, bz, bw) = (
                &bx[base..base + len],
                &by[base..base + len],
                &bz[base..base + len],
                &bw[base..base + len],
            );
            for j in 0..len {
                let q = Quaternion {
                    x: ax[j],
                    y: ay[j],
                    z: az[j],
                    w: aw[j],
                }
                .compose(&Quaternion {
                    x: bx[j],
                    y: by[j],
                    z: bz[j],
                    w: bw[j],
                });
                cx[j] = q.x;
                cy[j] = q.y;
                cz[j] = q.z;
                cw[j] = q.w;
            }
        });
    RotationBatch::from_lanes(a.shape().clone(), ox, oy, oz, ow).unwrap()
}

fn par_apply_lanes(
    q_lanes: (&[f64], &[f64], &[f64], &[f64]),
    v_lanes: (&[f64], &[f64], &[f64]),
    t_lanes: Option<(&[f64], &[f64], &[f64])>,
    n: usize,
) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let (qx, qy, qz, qw) = q_lanes;
    let (vx, vy, vz) = v_lanes;
    let mut ox = vec![0.0; n];
    let mut oy = vec![0.0; n];
    let mut oz = vec![0.0; n];
    chunks3(&mut ox, &mut oy, &mut oz)
        .into_par_iter()
        .enumerate()
        .for_each(|(ci, ((cx, cy), cz))| {
            let base = ci * CHUNK;
            let len = cx.len();
            let (qx, qy, qz, qw) = (
                &qx[base..base + len],
                &qy[base..base + len],
                &qz[base..base + len],
                &qw[base..base + len],
            );
            let (vx, vy, vz) = (
                &vx[base..base + len],
                &vy[base..base + len],
                &vz[base..base + len],
            );
            let t = t_lanes.map(|(tx, ty, tz)| {
                (
                    &tx[base..base + len],
                    &ty[base..base + len],
                    &tz[base..base + len],
                )
            });
            for j in 0..len {
                let q = Quaternion {
                    x: qx[j],
                    y: qy[j],
                    z: qz[j],
                    w: qw[j],
                };
                let r = q.apply([vx[j], vy[j], vz[j]]);
                match &t {
                    Some((tx, ty, tz)) => {
                        cx[j] = r[0] + tx[j];
                        cy[j] = r[1] + ty[j];
                        cz[j] = r[2] + tz[j];
                    }
                    None => {
                        cx[j] = r[0];
                        cy[j] = r[1];
                        cz[j] = r[2];
                    }
                }
            }
        });
    (ox, oy, oz)
}

fn par_rotation_apply(r: &RotationBatch<f64>, v: &Vec3Batch<f64>) -> Vec3Batch<f64> {
    let (x, y, z) = par_apply_lanes(r.lanes(), v.lanes(), None, r.len());
    Vec3Batch::from_lanes(r.shape().clone(), x, y, z).unwrap()
}

fn par_transform_apply(t: &TransformBatch<f64>, p: &Vec3Batch<f64>) -> Vec3Batch<f64> {
    let (rotations, translations) = t.parts();
    let (x, y, z) = par_apply_lanes(
        rotations.lanes(),
        p.lanes(),
        Some(translations.lanes()),
        t.len(),
    );
    Vec3Batch::from_lanes(t.shape().clone(), x, y, z).unwrap()
}

fn par_transform_compose(a: &TransformBatch<f64>, b: &TransformBatch<f64>) -> TransformBatch<f64> {
    let (a_rot, a_trans) = a.parts();
    let (b_rot, b_trans) = b.parts();
    let rotations = par_rotation_compose(a_rot, b_rot);
    let (tx, ty, tz) = par_apply_lanes(
        a_rot.lanes(),
        b_trans.lanes(),
        Some(a_trans.lanes()),
        a.len(),
    );
    let translations = Vec3Batch::from_lanes(a.shape().clone(), tx, ty, tz).unwrap();
    TransformBatch::from_parts(rotations, translations).unwrap()
}

/// Bitwise comparison of two outputs regardless of layout. Returns the
/// index and component of the first mismatch.
pub(crate) fn equivalent(a: &Output, b: &Output) -> Result<(), String> {
    let na = output_len(a);
    let nb = output_len(b);
    if na != nb {
        return Err(format!("length mismatch: {na} vs {nb}"));
    }
    for i in 0..na {
        let ca = element_bits(a, i);
        let cb = element_bits(b, i);
        if ca != cb {
            return Err(format!("element {i} differs: {ca:?} vs {cb:?}"));
        }
    }
    Ok(())
}

fn output_len(o: &Output) -> usize {
    match o {
        Output::Rotations(v) => v.len(),
        Output::RotationSoa(b) => b.len(),
        Output::Vectors(v) => v.len(),
        Output::VectorSoa(b) => b.len(),
        Output::Transforms(v) => v.len(),
        Output::TransformSoa(b) => b.len(),
    }
}

fn element_bits(o: &Output, i: usize) -> Vec<u64> {
    match o {
        Output::Rotations(v) => v[i].as_quat().iter().map(|c| c.to_bits()).collect(),
        Output::RotationSoa(b) => b.get(i).as_quat().iter().map(|c| c.to_bits()).collect(),
        Output::Vectors(v) => v[i].iter().map(|c| c.to_bits()).collect(),
        Output::VectorSoa(b) => b.get(i).iter().map(|c| c.to_bits()).collect(),
        Output::Transforms(v) => transform_bits(&v[i]),
        Output::TransformSoa(b) => transform_bits(&b.get(i)),
    }
}

fn transform_bits(t: &RigidTransform<f64>) -> Vec<u64> {
    t.rotation
        .as_quat()
        .iter()
        .chain(t.translation.iter())
        .map(|c| c.to_bits())
        .collect()
}
