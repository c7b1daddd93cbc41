//! Checks against routes that share no code with the implementation:
//! explicit cross products, explicit matrix products, and a null-space solve
//! of `(R − I) n = 0` built from row cross products.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_6, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rodrigues_core::*;

fn random_axis(rng: &mut impl Rng) -> UnitVector3 {
    loop {
        let v = Vector3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let n2 = v.norm_squared();
        if n2 > 1e-4 && n2 <= 1.0 {
            return UnitVector3::normalize(v).unwrap();
        }
    }
}

fn random_vector(rng: &mut impl Rng) -> Vector3 {
    Vector3::new(
        rng.random_range(-5.0..5.0),
        rng.random_range(-5.0..5.0),
        rng.random_range(-5.0..5.0),
    )
}

/// Plain row-by-column product, written out independently of `Matrix3::mul_vector`.
fn matvec(m: &[f64; 9], v: &Vector3) -> Vector3 {
    let v = [v.x, v.y, v.z];
    let row = |i: usize| (0..3).map(|k| m[3 * i + k] * v[k]).sum::<f64>();
    Vector3::new(row(0), row(1), row(2))
}

/// Null vector of `R − I`: the largest cross product of two of its rows.
fn null_space_axis(m: &[f64; 9]) -> Vector3 {
    let a = |i: usize| {
        Vector3::new(
            m[3 * i] - if i == 0 { 1.0 } else { 0.0 },
            m[3 * i + 1] - if i == 1 { 1.0 } else { 0.0 },
            m[3 * i + 2] - if i == 2 { 1.0 } else { 0.0 },
        )
    };
    let candidates = [a(0).cross(&a(1)), a(1).cross(&a(2)), a(2).cross(&a(0))];
    let best = candidates
        .into_iter()
        .max_by(|p, q| p.norm().total_cmp(&q.norm()))
        .unwrap();
    best * (1.0 / best.norm())
}

fn up_to_sign(a: &Vector3, b: &Vector3) -> f64 {
    (*a - *b).max_abs().min((*a + *b).max_abs())
}

#[test]
fn skew_matches_cross_product_on_random_axes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let n = random_axis(&mut rng);
        let v = random_vector(&mut rng);
        let direct = Vector3::new(
            n.y() * v.z - n.z() * v.y,
            n.z() * v.x - n.x() * v.z,
            n.x() * v.y - n.y() * v.x,
        );
        let got = skew(n).mul_vector(&v);
        assert!((got - direct).max_abs() <= 1e-15, "{got:?} vs {direct:?}");
    }
}

#[test]
fn rotate_vector_agrees_with_matrix_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let aa = AxisAngle {
            axis: random_axis(&mut rng),
            angle: rng.random_range(-PI..PI),
        };
        let v = random_vector(&mut rng);
        let via_matrix = matvec(&rotation_from_axis_angle(&aa).to_array(), &v);
        let got = rotate_vector(&aa, &v);
        assert!((got - via_matrix).max_abs() <= 1e-12);
        assert!((got.norm() - v.norm()).abs() <= 1e-12);
    }
}

#[test]
fn decompose_reconstruction_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let n = random_axis(&mut rng);
        let v = random_vector(&mut rng);
        let (par, perp) = decompose(n, &v);
        assert!((par + perp - v).max_abs() <= 1e-14);
        assert!(perp.dot(&n.as_vector()).abs() <= 1e-12);
    }
}

#[test]
fn extracted_axis_matches_null_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..2000 {
        let axis = random_axis(&mut rng);
        let angle = rng.random_range(0.01..(PI - 0.01)) * if rng.random() { 1.0 } else { -1.0 };
        let r = rotation_from_axis_angle(&AxisAngle { axis, angle });
        let (found, _) = extract_axis(&r).unwrap();
        let oracle = null_space_axis(&r.to_array());
        assert!(up_to_sign(&found.as_vector(), &oracle) <= 1e-9);
        assert!((r.mul_vector(&found.as_vector()) - found.as_vector()).norm() <= 1e-9);
    }
}

#[test]
fn half_turn_about_z_matches_null_space() {
    let m = [-1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0];
    let oracle = null_space_axis(&m);
    assert!(up_to_sign(&oracle, &Vector3::new(0.0, 0.0, 1.0)) == 0.0);
    let (axis, class) = extract_axis(&RotationMatrix::new(m).unwrap()).unwrap();
    assert_eq!(axis.as_vector(), Vector3::new(0.0, 0.0, 1.0));
    assert_eq!(class, DegeneracyClass::NearPiAngle);
}

#[test]
fn example_pipeline() {
    let axis = UnitVector3::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0).unwrap();
    let r = rotation_from_axis_angle(&AxisAngle {
        axis,
        angle: FRAC_PI_6,
    });
    let (found, class) = extract_axis(&r).unwrap();
    assert_eq!(class, DegeneracyClass::Generic);
    assert!(up_to_sign(&found.as_vector(), &axis.as_vector()) <= 1e-15);

    let rep = matrix_to_axis_angle(&r).unwrap();
    assert!((rep.result.axis.as_vector() - axis.as_vector()).max_abs() <= 1e-12);
    assert!((rep.result.angle - FRAC_PI_6).abs() <= 1e-12);
    assert!(rep.residual_reconstruction <= 1e-12);
}

#[test]
fn round_trip_many_random_rotations() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100_000 {
        let aa = AxisAngle {
            axis: random_axis(&mut rng),
            angle: rng.random_range(-PI..PI),
        };
        let r = rotation_from_axis_angle(&aa);
        let rep = matrix_to_axis_angle(&r).unwrap();
        assert!(rep.residual_reconstruction <= 1e-9, "{aa:?} -> {rep:?}");
    }
}

#[test]
fn near_pi_stability() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let axis = random_axis(&mut rng);
        for eps in [1e-4, 1e-6, 1e-8, 0.0] {
            let r = rotation_from_axis_angle(&AxisAngle {
                axis,
                angle: PI - eps,
            });
            let rep = matrix_to_axis_angle(&r).unwrap();
            assert!(rep.residual_reconstruction <= 1e-7, "eps {eps}: {rep:?}");
        }
    }
}

#[test]
fn precession_stream_stays_continuous() {
    let tilt: f64 = 1.0;
    let step = 0.5f64.to_radians();
    let truth: Vec<UnitVector3> = (0..720)
        .map(|k| {
            let phi = step * k as f64;
            UnitVector3::normalize(Vector3::new(
                tilt.sin() * phi.cos(),
                tilt.sin() * phi.sin(),
                tilt.cos(),
            ))
            .unwrap()
        })
        .collect();
    let ms: Vec<[f64; 9]> = truth
        .iter()
        .map(|&axis| rotation_from_axis_angle(&AxisAngle { axis, angle: 0.3 }).to_array())
        .collect();
    let samples = resolve_stream(&ms).unwrap();
    for pair in samples.windows(2) {
        assert!(pair[0].axis_angle.axis.dot(&pair[1].axis_angle.axis) > 0.99);
    }
    for (s, m) in samples.iter().zip(&ms) {
        let r = RotationMatrix::new(*m).unwrap();
        assert!(r.max_abs_diff(&rotation_from_axis_angle(&s.axis_angle)) <= 1e-9);
    }
}

#[test]
fn stream_crossing_pi_does_not_flip_axis() {
    // the canonical extractor branch flips whenever the angle crosses π;
    // the tracker must hold the axis steady and let the angle wrap instead
    let axis = UnitVector3::normalize(Vector3::new(0.3, -0.4, 0.5)).unwrap();
    let ms: Vec<[f64; 9]> = (0..200)
        .map(|k| {
            let angle = PI - 0.05 + 0.0005 * k as f64;
            rotation_from_axis_angle(&AxisAngle { axis, angle }).to_array()
        })
        .collect();
    let samples = resolve_stream(&ms).unwrap();
    assert!(samples.iter().any(|s| s.flipped));
    for pair in samples.windows(2) {
        assert!(pair[0].axis_angle.axis.dot(&pair[1].axis_angle.axis) > 0.0);
    }
    for s in &samples[1..] {
        assert!(s.axis_dot_previous.unwrap() > 0.0);
    }
}

#[test]
fn stream_with_random_branches_follows_slow_axis() {
    // synthesize each step with a randomly negated (axis, angle) pair; the
    // matrices are identical either way, so the track must not care
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ms = Vec::new();
    for k in 0..500 {
        let phi = 0.01 * k as f64;
        let axis = UnitVector3::normalize(Vector3::new(phi.cos(), phi.sin(), 0.2)).unwrap();
        let angle = rng.random_range(0.2..(PI - 0.2));
        let aa = AxisAngle { axis, angle };
        let aa = if rng.random() { aa.negated() } else { aa };
        ms.push(rotation_from_axis_angle(&aa).to_array());
    }
    let samples = resolve_stream(&ms).unwrap();
    for pair in samples.windows(2) {
        assert!(pair[0].axis_angle.axis.dot(&pair[1].axis_angle.axis) > 0.9);
    }
}
