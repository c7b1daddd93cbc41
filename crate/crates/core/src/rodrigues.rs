//! Forward Rodrigues synthesis and the trace identities that invert it.
//!
//! With `N` the cross-product matrix of the unit axis `n`:
//!
//! ```text
//! R        = I + sinθ N + (1 − cosθ) N N
//! tr R     = 1 + 2 cosθ
//! tr(N R)  = −2 sinθ
//! ```
//!
//! The last line follows from `tr N = 0`, `tr(NN) = −2` and `NNN = −N`. It
//! gives `sinθ` signed relative to the chosen `n`, which is what lets
//! [`angle_for_axis`] return the angle that belongs to that axis.

use core::f64::consts::PI;

use crate::tolerance::clamp_unit;
use crate::{Error, Matrix3, RotationMatrix, SkewMatrix, Tolerances, UnitVector3, Vector3};

/// A rotation as a unit axis and a signed angle in radians.
///
/// `(n, θ)` and `(−n, −θ)` describe the same rotation, as does any `θ + 2πk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub axis: UnitVector3,
    pub angle: f64,
}

impl AxisAngle {
    /// Fails if `angle` is not finite.
    pub fn new(axis: UnitVector3, angle: f64) -> Result<Self, Error> {
        if !angle.is_finite() {
            return Err(Error::NonFiniteVector);
        }
        Ok(AxisAngle { axis, angle })
    }

    /// Same rotation with the angle wrapped into `(−π, π]`.
    pub fn canonical(self) -> Self {
        let mut angle = libm::remainder(self.angle, 2.0 * PI);
        if angle <= -PI {
            angle = PI;
        }
        AxisAngle { angle, ..self }
    }

    /// The other valid description, `(−n, −θ)`.
    pub fn negated(self) -> Self {
        AxisAngle {
            axis: -self.axis,
            angle: -self.angle,
        }
    }
}

/// The cross-product matrix of `axis`:
///
/// ```text
/// [  0  −n₃   n₂ ]
/// [  n₃   0  −n₁ ]
/// [ −n₂  n₁    0 ]
/// ```
pub fn skew(axis: UnitVector3) -> SkewMatrix {
    SkewMatrix::from_axis(axis)
}

/// `R = I + sinθ N + (1 − cosθ) N N`.
pub fn rotation_from_axis_angle(aa: &AxisAngle) -> RotationMatrix {
    let n = skew(aa.axis);
    let (s, c) = (libm::sin(aa.angle), libm::cos(aa.angle));
    let r = Matrix3::IDENTITY + *n.as_matrix() * s + n.squared() * (1.0 - c);
    RotationMatrix::from_matrix_unchecked(r)
}

/// Rotates `v` with the vector form `(1 − cosθ) n (n·v) + cosθ v + sinθ n × v`.
///
/// Independent of [`rotation_from_axis_angle`]; the two are used to check
/// each other.
pub fn rotate_vector(aa: &AxisAngle, v: &Vector3) -> Vector3 {
    let n = aa.axis.as_vector();
    let (s, c) = (libm::sin(aa.angle), libm::cos(aa.angle));
    n * ((1.0 - c) * n.dot(v)) + *v * c + n.cross(v) * s
}

/// Splits `v` into the part along `axis` and the part perpendicular to it.
///
/// The perpendicular part is computed as `−n × (n × v)`, not as `v − parallel`.
pub fn decompose(axis: UnitVector3, v: &Vector3) -> (Vector3, Vector3) {
    let n = axis.as_vector();
    let parallel = n * n.dot(v);
    let perpendicular = -n.cross(&n.cross(v));
    (parallel, perpendicular)
}

/// `cosθ = (tr R − 1) / 2`, clamped to `[−1, 1]` when the overshoot is rounding.
pub fn cos_theta_from_trace(r: &RotationMatrix) -> Result<f64, Error> {
    clamp_unit((r.trace() - 1.0) / 2.0, Tolerances::DEFAULT.clamp)
}

/// `sinθ = −tr(N R) / 2`, signed relative to the axis `n` was built from.
pub fn sin_theta_from_skew_product(n: &SkewMatrix, r: &RotationMatrix) -> Result<f64, Error> {
    clamp_unit(
        -n.as_matrix().trace_of_product(r.as_matrix()) / 2.0,
        Tolerances::DEFAULT.clamp,
    )
}

/// The rotation angle of `r` about `axis`, in `(−π, π]`.
///
/// `axis` must be a fixed axis of `r`. Passing `−axis` returns the negated angle.
pub fn angle_for_axis(axis: UnitVector3, r: &RotationMatrix) -> Result<f64, Error> {
    angle_for_axis_with(axis, r, &Tolerances::DEFAULT)
}

/// As [`angle_for_axis`] with explicit tolerances.
pub fn angle_for_axis_with(
    axis: UnitVector3,
    r: &RotationMatrix,
    tol: &Tolerances,
) -> Result<f64, Error> {
    let n = axis.as_vector();
    let residual = (r.mul_vector(&n) - n).norm();
    if !(residual <= tol.axis_invariance) {
        return Err(Error::AxisNotInvariant { residual });
    }
    let cos = clamp_unit((r.trace() - 1.0) / 2.0, tol.clamp)?;
    let sin = clamp_unit(
        -skew(axis).as_matrix().trace_of_product(r.as_matrix()) / 2.0,
        tol.clamp,
    )?;
    let angle = libm::atan2(sin, cos);
    // `+ 0.0` turns a negative zero into zero
    Ok(if angle <= -PI { PI } else { angle + 0.0 })
}
