//! Randomized algebra suite for rigid transforms: group laws, the 4x4
//! matrix homomorphism, and rigid-motion geometry.

mod common;

use common::*;
use spatial_core::{vec3, Mat4, RigidTransform};

const CASES: usize = 1000;

fn mat4_distance(a: &Mat4<f64>, b: &Mat4<f64>) -> f64 {
    let mut d = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            d = d.max((a.0[i][j] - b.0[i][j]).abs());
        }
    }
    d
}

fn tf_distance(a: &RigidTransform<f64>, b: &RigidTransform<f64>) -> f64 {
    quat_distance(&a.rotation, &b.rotation).max(vec_distance(a.translation, b.translation))
}

#[test]
fn group_laws() {
    let mut rng = rng(0x5e31);
    for _ in 0..CASES {
        let a = random_transform(&mut rng);
        let b = random_transform(&mut rng);
        let c = random_transform(&mut rng);

        let assoc_l = a.compose(&b).compose(&c);
        let assoc_r = a.compose(&b.compose(&c));
        assert!(tf_distance(&assoc_l, &assoc_r) < 1e-12);

        let id = RigidTransform::identity();
        assert!(tf_distance(&a.compose(&id), &a) < 1e-12);
        assert!(tf_distance(&id.compose(&a), &a) < 1e-12);
        assert!(tf_distance(&a.compose(&a.inverse()), &id) < 1e-12);
    }
}

#[test]
fn matrix_homomorphism() {
    let mut rng = rng(0x5e32);
    for _ in 0..CASES {
        let a = random_transform(&mut rng);
        let b = random_transform(&mut rng);
        let lhs = a.compose(&b).as_matrix();
        let rhs = a.as_matrix() * b.as_matrix();
        assert!(mat4_distance(&lhs, &rhs) < 1e-12);
    }
}

#[test]
fn matrix_round_trip() {
    let mut rng = rng(0x5e33);
    for _ in 0..CASES {
        let t = random_transform(&mut rng);
        let back = RigidTransform::from_matrix(&t.as_matrix()).unwrap();
        assert!(tf_distance(&t, &back) < 1e-12);
    }
}

#[test]
fn as_matrix_structure() {
    let mut rng = rng(0x5e34);
    for _ in 0..CASES {
        let m = random_transform(&mut rng).as_matrix();
        assert_eq!(m.0[3], [0.0, 0.0, 0.0, 1.0]);
        let r = m.rotation_block();
        let gram = r.transpose() * r;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((gram[(i, j)] - target).abs() < 1e-10);
            }
        }
        assert!((r.det() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn rigid_motion_preserves_distances_and_handedness() {
    let mut rng = rng(0x5e35);
    for _ in 0..CASES {
        let t = random_transform(&mut rng);
        let p = random_vector(&mut rng, 2.0);
        let q = random_vector(&mut rng, 2.0);
        let r = random_vector(&mut rng, 2.0);

        let d_before = vec3::norm(vec3::sub(p, q));
        let d_after = vec3::norm(vec3::sub(t.apply(p), t.apply(q)));
        assert!((d_before - d_after).abs() < 1e-12);

        // inverse undoes
        assert!(vec_distance(t.apply_inverse(t.apply(p)), p) < 1e-12);

        // handedness of the displaced triad
        let u = vec3::sub(q, p);
        let v = vec3::sub(r, p);
        let w = vec3::cross(u, v);
        let tu = vec3::sub(t.apply(q), t.apply(p));
        let tv = vec3::sub(t.apply(r), t.apply(p));
        let triple = vec3::dot(w, vec3::cross(u, v));
        let ttriple = vec3::dot(t.rotation.apply(w), vec3::cross(tu, tv));
        if triple.abs() > 1e-9 {
            assert_eq!(triple.signum(), ttriple.signum());
        }
    }
}
