//! Axis extraction: solving `R n = n` in closed form.
//!
//! Three regimes, picked from `cosθ = (tr R − 1)/2` and the size of the
//! antisymmetric part `(R − Rᵀ)/2 = sinθ N`:
//!
//! * **Generic** (`|sinθ| ≥ 1e-4`): the axis is the vee of the antisymmetric
//!   part, normalized. This pins `sinθ > 0`.
//! * **Near π** (`cosθ ≤ −1 + 1e-8`): the antisymmetric part vanishes, so the
//!   axis is read from the symmetric part, `n nᵀ = ((R + Rᵀ)/2 − cosθ I)/(1 − cosθ)`,
//!   using the column with the largest diagonal entry. The sign makes the
//!   first nonzero component positive.
//! * **Near zero** (`cosθ ≥ 1 − 1e-12`): the axis is undefined and
//!   [`extract_axis`] fails with [`Error::IdentityRotation`].
//!
//! Small angles above the identity threshold but with `|sinθ| < 1e-4` still
//! use the vee, which stays accurate there; they are reported as
//! [`DegeneracyClass::NearZeroAngle`].

use core::fmt;

use crate::rodrigues::{angle_for_axis_with, rotation_from_axis_angle};
use crate::tolerance::clamp_unit;
use crate::{AxisAngle, Error, Matrix3, RotationMatrix, Tolerances, UnitVector3, Vector3};

/// Axis returned for the identity rotation, where any axis is valid.
pub const CONVENTIONAL_AXIS: UnitVector3 = UnitVector3::Z;

/// Components at or below this magnitude are skipped by the near-π sign rule.
const SIGN_EPS: f64 = 1e-12;

/// Regime boundaries for [`extract_axis_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractionThresholds {
    /// `|sinθ|` at or above which the antisymmetric part is used.
    pub generic_sin: f64,
    /// Near-π when `cosθ ≤ −1 + near_pi`.
    pub near_pi: f64,
    /// Identity when `cosθ ≥ 1 − near_zero`.
    pub near_zero: f64,
}

impl ExtractionThresholds {
    pub const DEFAULT: ExtractionThresholds = ExtractionThresholds {
        generic_sin: 1e-4,
        near_pi: 1e-8,
        near_zero: 1e-12,
    };
}

impl Default for ExtractionThresholds {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Which regime an extraction ran in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegeneracyClass {
    Generic,
    NearZeroAngle,
    NearPiAngle,
}

impl DegeneracyClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            DegeneracyClass::Generic => "Generic",
            DegeneracyClass::NearZeroAngle => "NearZeroAngle",
            DegeneracyClass::NearPiAngle => "NearPiAngle",
        }
    }
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the axis of a [`ConversionReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchNote {
    /// Vee of `(R − Rᵀ)/2`; the angle lands in `(0, π)`.
    AntisymmetricPart,
    /// Column of the symmetric part; first nonzero axis component positive.
    SymmetricPart,
    /// Vee of `(R − Rᵀ)/2` for a rotation within the identity threshold.
    NearIdentity,
    /// Exact identity: no axis information, [`CONVENTIONAL_AXIS`] reported.
    ConventionalAxis,
}

impl BranchNote {
    pub fn as_str(&self) -> &'static str {
        match self {
            BranchNote::AntisymmetricPart => "antisymmetric-part",
            BranchNote::SymmetricPart => "symmetric-part",
            BranchNote::NearIdentity => "near-identity",
            BranchNote::ConventionalAxis => "conventional-axis",
        }
    }

    /// True when the rotation is (numerically) the identity, so the reported
    /// axis says nothing about neighbouring rotations.
    pub fn is_identity(&self) -> bool {
        matches!(
            self,
            BranchNote::NearIdentity | BranchNote::ConventionalAxis
        )
    }
}

impl fmt::Display for BranchNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`matrix_to_axis_angle`] plus diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConversionReport {
    pub result: AxisAngle,
    pub degeneracy: DegeneracyClass,
    /// `‖R n − n‖`.
    pub residual_axis: f64,
    /// `‖R − rotation_from_axis_angle(result)‖_max`.
    pub residual_reconstruction: f64,
    pub branch_note: BranchNote,
}

impl ConversionReport {
    /// Reconstruction bound a conversion must meet to be accepted.
    pub const ACCEPT_RESIDUAL: f64 = 1e-9;

    pub fn is_accepted(&self) -> bool {
        self.residual_reconstruction <= Self::ACCEPT_RESIDUAL
    }
}

/// `(m₃₂ − m₂₃, m₁₃ − m₃₁, m₂₁ − m₁₂) / 2`, i.e. `sinθ · n`.
fn antisymmetric_vee(m: &Matrix3) -> Vector3 {
    Vector3::new(
        (m.at(2, 1) - m.at(1, 2)) / 2.0,
        (m.at(0, 2) - m.at(2, 0)) / 2.0,
        (m.at(1, 0) - m.at(0, 1)) / 2.0,
    )
}

fn axis_from_symmetric_part(m: &Matrix3, cos: f64) -> Result<UnitVector3, Error> {
    let sym = (*m + m.transpose()) * 0.5;
    let outer = (sym - Matrix3::scalar(cos)) * (1.0 / (1.0 - cos));
    let j = (0..3)
        .max_by(|&a, &b| outer.at(a, a).total_cmp(&outer.at(b, b)))
        .unwrap_or(0);
    let axis = UnitVector3::normalize(outer.column(j))?;
    let leading = axis
        .to_array()
        .into_iter()
        .find(|c| libm::fabs(*c) > SIGN_EPS)
        .unwrap_or(1.0);
    Ok(if leading < 0.0 { -axis } else { axis })
}

/// Solves `R n = n` for a unit `n` with the default thresholds.
pub fn extract_axis(r: &RotationMatrix) -> Result<(UnitVector3, DegeneracyClass), Error> {
    extract_axis_with(r, &ExtractionThresholds::DEFAULT)
}

/// Solves `R n = n` for a unit `n`.
///
/// Fails with [`Error::IdentityRotation`] when `cosθ ≥ 1 − thresholds.near_zero`.
pub fn extract_axis_with(
    r: &RotationMatrix,
    thresholds: &ExtractionThresholds,
) -> Result<(UnitVector3, DegeneracyClass), Error> {
    classify_and_extract(r, thresholds, Tolerances::DEFAULT.clamp)
}

fn classify_and_extract(
    r: &RotationMatrix,
    thresholds: &ExtractionThresholds,
    clamp: f64,
) -> Result<(UnitVector3, DegeneracyClass), Error> {
    let cos = clamp_unit((r.trace() - 1.0) / 2.0, clamp)?;
    if cos >= 1.0 - thresholds.near_zero {
        return Err(Error::IdentityRotation);
    }
    let m = r.as_matrix();
    if cos <= -1.0 + thresholds.near_pi {
        return Ok((
            axis_from_symmetric_part(m, cos)?,
            DegeneracyClass::NearPiAngle,
        ));
    }
    let vee = antisymmetric_vee(m);
    if vee.norm() >= thresholds.generic_sin {
        return Ok((UnitVector3::normalize(vee)?, DegeneracyClass::Generic));
    }
    if cos > 0.0 {
        Ok((UnitVector3::normalize(vee)?, DegeneracyClass::NearZeroAngle))
    } else {
        // only reachable with overridden thresholds
        Ok((
            axis_from_symmetric_part(m, cos)?,
            DegeneracyClass::NearPiAngle,
        ))
    }
}

/// Full matrix → axis-angle conversion with default thresholds and tolerances.
pub fn matrix_to_axis_angle(r: &RotationMatrix) -> Result<ConversionReport, Error> {
    matrix_to_axis_angle_with(r, &ExtractionThresholds::DEFAULT, &Tolerances::DEFAULT)
}

/// Extracts the axis, then gets the angle for that axis from the trace
/// identities and `atan2`.
///
/// Identity rotations do not fail here: a nonzero antisymmetric part still
/// yields its axis, and the exact identity reports [`CONVENTIONAL_AXIS`] with
/// angle 0.
pub fn matrix_to_axis_angle_with(
    r: &RotationMatrix,
    thresholds: &ExtractionThresholds,
    tol: &Tolerances,
) -> Result<ConversionReport, Error> {
    let (axis, degeneracy, branch_note) = match classify_and_extract(r, thresholds, tol.clamp) {
        Ok((axis, class)) => {
            let note = match class {
                DegeneracyClass::NearPiAngle => BranchNote::SymmetricPart,
                _ => BranchNote::AntisymmetricPart,
            };
            (axis, class, note)
        }
        Err(Error::IdentityRotation) => {
            match UnitVector3::normalize(antisymmetric_vee(r.as_matrix())) {
                Ok(axis) => (
                    axis,
                    DegeneracyClass::NearZeroAngle,
                    BranchNote::NearIdentity,
                ),
                Err(_) => (
                    CONVENTIONAL_AXIS,
                    DegeneracyClass::NearZeroAngle,
                    BranchNote::ConventionalAxis,
                ),
            }
        }
        Err(e) => return Err(e),
    };
    let angle = angle_for_axis_with(axis, r, tol)?;
    Ok(report(
        r,
        AxisAngle { axis, angle },
        degeneracy,
        branch_note,
    ))
}

pub(crate) fn report(
    r: &RotationMatrix,
    result: AxisAngle,
    degeneracy: DegeneracyClass,
    branch_note: BranchNote,
) -> ConversionReport {
    let n = result.axis.as_vector();
    ConversionReport {
        result,
        degeneracy,
        residual_axis: (r.mul_vector(&n) - n).norm(),
        residual_reconstruction: r.max_abs_diff(&rotation_from_axis_angle(&result)),
        branch_note,
    }
}
