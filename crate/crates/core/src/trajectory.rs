//! Branch selection for streams of rotations.
//!
//! Every non-identity rotation has two valid axis-angle descriptions,
//! `(n, θ)` and `(−n, −θ)`. When the axis drifts slowly, picking the one whose
//! axis has the larger inner product with the previously emitted axis gives a
//! continuous track. The angle is always recomputed for the chosen axis via
//! the trace identities, never by flipping signs after the fact.

#[cfg(feature = "alloc")]
use alloc::vec::Vec;

use crate::extract::{matrix_to_axis_angle_with, report, BranchNote, CONVENTIONAL_AXIS};
use crate::rodrigues::angle_for_axis_with;
use crate::{
    AxisAngle, DegeneracyClass, Error, ExtractionThresholds, RotationMatrix, Tolerances,
    UnitVector3,
};

/// What a [`BranchStrategy`] decided about the extractor's canonical branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchChoice {
    /// Use `(n, θ)` as extracted.
    Keep,
    /// Use `(−n, −θ)`.
    Flip,
}

/// Picks one of the two valid branches given the previously emitted axis.
pub trait BranchStrategy {
    fn choose(&self, previous: Option<UnitVector3>, canonical: UnitVector3) -> BranchChoice;
}

/// Choose the axis with the largest inner product with the previous axis.
///
/// A dot product of exactly zero keeps the canonical branch.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LargestInnerProduct;

impl BranchStrategy for LargestInnerProduct {
    fn choose(&self, previous: Option<UnitVector3>, canonical: UnitVector3) -> BranchChoice {
        match previous {
            Some(p) if p.dot(&canonical) < 0.0 => BranchChoice::Flip,
            _ => BranchChoice::Keep,
        }
    }
}

/// State threaded through a stream.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ContinuityState {
    /// Axis of the last non-identity sample, if any.
    pub previous_axis: Option<UnitVector3>,
    /// Index the next sample will get.
    pub sample_index: usize,
}

impl ContinuityState {
    /// State seeded with a known previous axis.
    pub fn seeded(axis: UnitVector3) -> Self {
        ContinuityState {
            previous_axis: Some(axis),
            sample_index: 0,
        }
    }
}

/// One resolved element of a stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackSample {
    pub index: usize,
    pub axis_angle: AxisAngle,
    /// Whether the extractor's canonical branch was negated.
    pub flipped: bool,
    /// Dot of the emitted axis with the previous axis; `None` before the
    /// first informative sample.
    pub axis_dot_previous: Option<f64>,
    pub degeneracy: DegeneracyClass,
    pub branch_note: BranchNote,
    /// `‖R n − n‖` for the emitted axis.
    pub residual_axis: f64,
    /// `‖R − rotation_from_axis_angle(axis_angle)‖_max`.
    pub residual_reconstruction: f64,
}

/// Stateful resolver; a fold of [`resolve_with_previous`] with a configurable strategy.
#[derive(Debug, Clone)]
pub struct Tracker<S = LargestInnerProduct> {
    state: ContinuityState,
    strategy: S,
    thresholds: ExtractionThresholds,
    tolerances: Tolerances,
}

impl Tracker<LargestInnerProduct> {
    pub fn new() -> Self {
        Tracker::with_strategy(LargestInnerProduct, ContinuityState::default())
    }

    pub fn seeded(axis: UnitVector3) -> Self {
        Tracker::with_strategy(LargestInnerProduct, ContinuityState::seeded(axis))
    }
}

impl Default for Tracker<LargestInnerProduct> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: BranchStrategy> Tracker<S> {
    pub fn with_strategy(strategy: S, state: ContinuityState) -> Self {
        Tracker {
            state,
            strategy,
            thresholds: ExtractionThresholds::DEFAULT,
            tolerances: Tolerances::DEFAULT,
        }
    }

    pub fn thresholds(mut self, thresholds: ExtractionThresholds) -> Self {
        self.thresholds = thresholds;
        self
    }

    pub fn tolerances(mut self, tolerances: Tolerances) -> Self {
        self.tolerances = tolerances;
        self
    }

    pub fn state(&self) -> &ContinuityState {
        &self.state
    }

    /// Resolves the next rotation of the stream and advances the state.
    pub fn push(&mut self, r: &RotationMatrix) -> Result<TrackSample, Error> {
        let rep = matrix_to_axis_angle_with(r, &self.thresholds, &self.tolerances)?;
        let previous = self.state.previous_axis;

        let (axis, flipped) = if rep.branch_note == BranchNote::ConventionalAxis {
            (previous.unwrap_or(CONVENTIONAL_AXIS), false)
        } else {
            match self.strategy.choose(previous, rep.result.axis) {
                BranchChoice::Keep => (rep.result.axis, false),
                BranchChoice::Flip => (-rep.result.axis, true),
            }
        };
        let angle = angle_for_axis_with(axis, r, &self.tolerances)?;
        let chosen = report(
            r,
            AxisAngle { axis, angle },
            rep.degeneracy,
            rep.branch_note,
        );

        let sample = TrackSample {
            index: self.state.sample_index,
            axis_angle: chosen.result,
            flipped,
            axis_dot_previous: previous.map(|p| p.dot(&axis)),
            degeneracy: rep.degeneracy,
            branch_note: rep.branch_note,
            residual_axis: chosen.residual_axis,
            residual_reconstruction: chosen.residual_reconstruction,
        };

        self.state.sample_index += 1;
        if !rep.branch_note.is_identity() {
            self.state.previous_axis = Some(axis);
        }
        Ok(sample)
    }
}

/// One step of the largest-inner-product rule: resolves `r` against `state`
/// and returns the sample together with the successor state.
pub fn resolve_with_previous(
    state: ContinuityState,
    r: &RotationMatrix,
) -> Result<(TrackSample, ContinuityState), Error> {
    let mut tracker = Tracker::with_strategy(LargestInnerProduct, state);
    let sample = tracker.push(r)?;
    Ok((sample, tracker.state))
}

/// A stream element failed.
#[cfg(feature = "alloc")]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamError {
    /// Zero-based position of the offending matrix.
    pub index: usize,
    pub error: Error,
}

#[cfg(feature = "alloc")]
impl core::fmt::Display for StreamError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "matrix {}: {}", self.index, self.error)
    }
}

#[cfg(feature = "alloc")]
impl core::error::Error for StreamError {}

/// Validates and resolves row-major matrices in order, stopping at the first
/// invalid one.
#[cfg(feature = "alloc")]
pub fn resolve_stream(matrices: &[[f64; 9]]) -> Result<Vec<TrackSample>, StreamError> {
    let mut tracker = Tracker::new();
    matrices
        .iter()
        .enumerate()
        .map(|(index, m)| {
            RotationMatrix::new(*m)
                .and_then(|r| tracker.push(&r))
                .map_err(|error| StreamError { index, error })
        })
        .collect()
}
