/// Numerical tolerances used when validating inputs.
///
/// The defaults are the documented contract of this crate; override fields
/// individually when a caller's data is noisier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max-norm bound on `RᵀR − I`.
    pub orthogonality: f64,
    /// Bound on `|det R − 1|`.
    pub determinant: f64,
    /// Bound on `|‖n‖ − 1|` for a unit axis.
    pub unit_norm: f64,
    /// How far a trace-derived cosine/sine may leave `[−1, 1]` and still be clamped.
    pub clamp: f64,
    /// Bound on `‖R·n − n‖` for an axis passed to `angle_for_axis`.
    pub axis_invariance: f64,
}

impl Tolerances {
    /// Defaults: orthogonality and determinant 1e-9, unit norm 1e-12,
    /// clamp 1e-9, axis invariance 1e-6.
    pub const DEFAULT: Tolerances = Tolerances {
        orthogonality: 1e-9,
        determinant: 1e-9,
        unit_norm: 1e-12,
        clamp: 1e-9,
        axis_invariance: 1e-6,
    };

    /// Defaults with a different orthogonality bound.
    pub const fn with_orthogonality(orthogonality: f64) -> Self {
        Tolerances {
            orthogonality,
            ..Self::DEFAULT
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Clamp `value` into `[−1, 1]` if it overshoots by at most `slack`.
pub(crate) fn clamp_unit(value: f64, slack: f64) -> Result<f64, crate::Error> {
    if !value.is_finite() || libm::fabs(value) - 1.0 > slack {
        return Err(crate::Error::TraceOutOfRange { value });
    }
    Ok(value.clamp(-1.0, 1.0))
}
