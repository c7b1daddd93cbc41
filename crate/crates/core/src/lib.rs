//! Rotation matrix / axis-angle conversions built on the Rodrigues formula.
//!
//! The forward direction synthesizes `R = I + sinθ N + (1 − cosθ) N²` from a
//! unit axis `n` and its cross-product matrix `N`. The inverse direction reads
//! `cosθ` from the trace of `R` and `sinθ` from `−tr(NR)/2`, so the angle comes
//! out of a two-argument arctangent already matched to the chosen axis. No
//! branch guessing is needed: `(n, θ)` and `(−n, −θ)` both fall out correctly.
//!
//! Properties:
//! - `no_std` always; the `alloc` feature (on by default) adds [`resolve_stream`].
//! - All matrices are row-major `[f64; 9]`.
//! - All angles are radians.
//!
//! # Feature flags
//! - **`alloc`**: stream helpers returning `alloc::vec::Vec`.
//! - **`std`**: implies `alloc`; reserved for std-only conveniences.
#![no_std]
#![deny(unsafe_code)]

#[cfg(feature = "alloc")]
extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod extract;
mod matrix;
mod rodrigues;
mod tolerance;
mod trajectory;
mod vector;

pub use error::{Error, MatrixDefect};
pub use extract::{
    extract_axis, extract_axis_with, matrix_to_axis_angle, matrix_to_axis_angle_with, BranchNote,
    ConversionReport, DegeneracyClass, ExtractionThresholds, CONVENTIONAL_AXIS,
};
pub use matrix::{Matrix3, RotationMatrix, SkewMatrix};
pub use rodrigues::{
    angle_for_axis, angle_for_axis_with, cos_theta_from_trace, decompose, rotate_vector,
    rotation_from_axis_angle, sin_theta_from_skew_product, skew, AxisAngle,
};
pub use tolerance::Tolerances;
#[cfg(feature = "alloc")]
pub use trajectory::{resolve_stream, StreamError};
pub use trajectory::{
    resolve_with_previous, BranchChoice, BranchStrategy, ContinuityState, LargestInnerProduct,
    TrackSample, Tracker,
};
pub use vector::{UnitVector3, Vector3};
