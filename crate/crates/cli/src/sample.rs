//! Reproducible random rotations.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rodrigues_core::{rotation_from_axis_angle, AxisAngle, RotationMatrix, UnitVector3, Vector3};

/// Axis uniform on the sphere, angle uniform in `(−π, π)`.
pub fn random_axis_angle<R: Rng + ?Sized>(rng: &mut R) -> AxisAngle {
    let axis = loop {
        let v = Vector3::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        if let Ok(u) = UnitVector3::normalize(v) {
            break u;
        }
    };
    AxisAngle {
        axis,
        angle: rng.random_range(-PI..PI),
    }
}

/// `n` seeded samples with their synthesized matrices.
pub fn random_rotations(n: usize, seed: u64) -> Vec<(AxisAngle, RotationMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let aa = random_axis_angle(&mut rng);
            (aa, rotation_from_axis_angle(&aa))
        })
        .collect()
}
