use core::fmt;

/// Why a 3×3 matrix was refused as a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixDefect {
    /// An entry is NaN or infinite.
    NonFinite,
    /// `‖RᵀR − I‖_max` exceeded the orthogonality tolerance.
    NotOrthogonal {
        /// Observed max-norm deviation.
        deviation: f64,
    },
    /// `det R` is not `+1` within tolerance (reflections land here).
    NotProper {
        /// Observed determinant.
        determinant: f64,
    },
}

/// Errors produced by the conversion routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// The matrix failed rotation validation.
    NonRotationInput(MatrixDefect),
    /// A vector offered as a rotation axis is not unit length.
    NonUnitAxis {
        /// Euclidean norm of the offending vector.
        norm: f64,
    },
    /// A vector component is NaN or infinite.
    NonFiniteVector,
    /// A trace-derived cosine or sine left `[−1, 1]` by more than the clamp tolerance.
    TraceOutOfRange {
        /// The unclamped value.
        value: f64,
    },
    /// The supplied axis is not a fixed axis of the rotation.
    AxisNotInvariant {
        /// `‖R·n − n‖`.
        residual: f64,
    },
    /// The rotation is the identity (to tolerance), so it has no axis.
    IdentityRotation,
}

impl fmt::Display for MatrixDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixDefect::NonFinite => f.write_str("matrix has a non-finite entry"),
            MatrixDefect::NotOrthogonal { deviation } => {
                write!(
                    f,
                    "matrix is not orthogonal (max |RᵀR − I| = {deviation:e})"
                )
            }
            MatrixDefect::NotProper { determinant } => {
                write!(f, "matrix is not a proper rotation (det = {determinant})")
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonRotationInput(defect) => write!(f, "non-rotation input: {defect}"),
            Error::NonUnitAxis { norm } => write!(f, "non-unit axis (norm = {norm})"),
            Error::NonFiniteVector => f.write_str("vector has a non-finite component"),
            Error::TraceOutOfRange { value } => {
                write!(f, "trace-derived value {value} is outside [-1, 1]")
            }
            Error::AxisNotInvariant { residual } => {
                write!(
                    f,
                    "axis is not invariant under the rotation (|Rn - n| = {residual:e})"
                )
            }
            Error::IdentityRotation => f.write_str("identity rotation has no defined axis"),
        }
    }
}

impl core::error::Error for Error {}
