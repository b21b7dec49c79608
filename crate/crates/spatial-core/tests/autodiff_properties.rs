//! Forward-mode backend properties: chain rule against central finite
//! differences, linearity of the directional derivative, and value-path
//! transparency of zero-tangent duals.

mod common;

use common::rng;
use rand::Rng;
use spatial_core::{directional_derivative, gradient, Dual, Scalar};

/// Pool of unary building blocks that are smooth and total on [-2, 2].
/// Each entry evaluates on any backend.
fn apply_op<T: Scalar>(op: usize, x: T) -> T {
    match op {
        0 => x.sin(),
        1 => x.cos(),
        2 => x * x,
        3 => (x * x + T::one()).sqrt(),
        4 => (x * T::from_f64(0.3)).exp(),
        5 => T::one() / (x * x + T::from_f64(2.0)),
        6 => x.atan2(T::from_f64(1.5)),
        7 => (x * x + T::from_f64(1.5)).ln(),
        8 => x * T::from_f64(-0.7) + T::from_f64(0.2),
        _ => unreachable!(),
    }
}

#[test]
fn chain_rule_matches_finite_differences() {
    let mut rng = rng(0xad01);
    for _ in 0..500 {
        let depth = rng.gen_range(3..=5);
        let ops: Vec<usize> = (0..depth).map(|_| rng.gen_range(0..9)).collect();
        let x0: f64 = rng.gen_range(-2.0..2.0);

        let eval = |x: f64| ops.iter().fold(x, |acc, &op| apply_op(op, acc));
        let eval_dual =
            |x: &[Dual]| ops.iter().fold(x[0], |acc, &op| apply_op(op, acc));

        let ad = directional_derivative(eval_dual, &[x0], &[1.0]);
        let h = 1e-6;
        let fd = (eval(x0 + h) - eval(x0 - h)) / (2.0 * h);

        // Central differences at h = 1e-6 carry ~1e-10 absolute rounding
        // noise for O(1) values; the relative bound only means something
        // above that floor.
        let denom = ad.abs().max(fd.abs());
        if denom > 1e-3 {
            let rel = (ad - fd).abs() / denom;
            assert!(rel < 1e-6, "ops {ops:?} at {x0}: ad = {ad}, fd = {fd}");
        } else {
            assert!(
                (ad - fd).abs() < 1e-9,
                "ops {ops:?} at {x0}: ad = {ad}, fd = {fd}"
            );
        }
    }
}

#[test]
fn directional_derivative_is_linear_in_direction() {
    let mut rng = rng(0xad02);
    // A fixed multivariate function of 4 inputs.
    let f = |x: &[Dual]| {
        (x[0] * x[1]).sin() + (x[2] * x[2] + Dual::constant(1.0)).sqrt() * x[3]
            + x[0] * x[2] * x[3]
    };
    for _ in 0..200 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let u: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let v: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(-2.0..2.0);

        let combo: Vec<f64> = u.iter().zip(&v).map(|(ui, vi)| a * ui + b * vi).collect();
        let lhs = directional_derivative(f, &x, &combo);
        let rhs =
            a * directional_derivative(f, &x, &u) + b * directional_derivative(f, &x, &v);
        let denom = lhs.abs().max(rhs.abs()).max(1.0);
        assert!((lhs - rhs).abs() / denom < 1e-12);
    }
}

#[test]
fn gradient_components_are_directional_derivatives() {
    let f = |x: &[Dual]| x[0] * x[1] * x[2] + x[1] * x[1];
    let x = [1.5, -0.5, 2.0];
    let g = gradient(f, &x);
    for i in 0..3 {
        let mut e = [0.0; 3];
        e[i] = 1.0;
        assert_eq!(g[i], directional_derivative(f, &x, &e));
    }
    // analytic: [yz, xz + 2y, xy]
    assert_eq!(g, vec![-1.0, 2.0, -0.75]);
}

#[test]
fn zero_tangent_matches_plain_floats_bitwise() {
    let mut rng = rng(0xad03);
    for _ in 0..500 {
        let depth = rng.gen_range(3..=5);
        let ops: Vec<usize> = (0..depth).map(|_| rng.gen_range(0..9)).collect();
        let x0: f64 = rng.gen_range(-2.0..2.0);
        let plain = ops.iter().fold(x0, |acc, &op| apply_op(op, acc));
        let dual = ops
            .iter()
            .fold(Dual::constant(x0), |acc, &op| apply_op(op, acc));
        assert_eq!(plain.to_bits(), dual.value.to_bits());
        assert_eq!(dual.tangent, 0.0);
    }
}
