//! Timing of three conversion paths over seeded random rotations.
//!
//! * `extended`: cosθ from the trace, sinθ from `−tr(NR)/2`, then `atan2`.
//! * `naive`: θ = arccos((tr R − 1)/2) ∈ [0, π], then synthesize both
//!   `(n, θ)` and `(n, −θ)` and keep the one that reproduces `R`.
//! * `forward`: Rodrigues synthesis alone.
//!
//! Both inverse paths use the same extracted axis, so they must land on the
//! same branch; the report counts samples where they do.

use std::f64::consts::PI;
use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use rodrigues_core::{
    angle_for_axis, extract_axis, rotation_from_axis_angle, AxisAngle, RotationMatrix, UnitVector3,
    CONVENTIONAL_AXIS,
};
use serde::Serialize;

use crate::format::to_line;
use crate::sample::random_rotations;
use crate::CliError;

/// Largest wrapped angle difference at which the two inverse paths agree.
pub const AGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathTiming {
    pub path: &'static str,
    pub n: usize,
    pub mean_ns: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Agreement {
    pub samples: usize,
    pub agreed: usize,
    pub max_angle_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub timings: [PathTiming; 3],
    pub agreement: Agreement,
}

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.agreement.agreed == self.agreement.samples
    }

    /// One JSON line per path, then the agreement line.
    pub fn write<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        for t in &self.timings {
            out.write_all(&to_line(t))?;
        }
        #[derive(Serialize)]
        struct Line<'a> {
            seed: u64,
            agreement: &'a Agreement,
        }
        out.write_all(&to_line(&Line {
            seed: self.seed,
            agreement: &self.agreement,
        }))?;
        out.flush()?;
        Ok(())
    }
}

fn axis_of(r: &RotationMatrix) -> UnitVector3 {
    extract_axis(r)
        .map(|(axis, _)| axis)
        .unwrap_or(CONVENTIONAL_AXIS)
}

/// Path (a).
pub fn extended_path(r: &RotationMatrix) -> AxisAngle {
    let axis = axis_of(r);
    let angle = angle_for_axis(axis, r).unwrap_or(0.0);
    AxisAngle { axis, angle }
}

/// Path (b): arccos, which cannot tell θ from −θ, followed by a
/// reconstruction check to pick the sign.
pub fn naive_path(r: &RotationMatrix) -> AxisAngle {
    let axis = axis_of(r);
    let angle = ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0).acos();
    let plus = AxisAngle { axis, angle };
    let minus = AxisAngle {
        axis,
        angle: -angle,
    };
    let err_plus = r.max_abs_diff(&rotation_from_axis_angle(&plus));
    let err_minus = r.max_abs_diff(&rotation_from_axis_angle(&minus));
    if err_minus < err_plus {
        minus
    } else {
        plus
    }
}

fn wrapped_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

fn time_path<T>(
    samples: &[(AxisAngle, RotationMatrix)],
    f: impl Fn(&(AxisAngle, RotationMatrix)) -> T,
) -> f64 {
    let start = Instant::now();
    for s in samples {
        black_box(f(black_box(s)));
    }
    start.elapsed().as_nanos() as f64 / samples.len() as f64
}

/// Runs all three paths over `n` rotations drawn with `seed`.
pub fn run_bench(n: usize, seed: u64) -> Result<BenchReport, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let samples = random_rotations(n, seed);

    let extended_ns = time_path(&samples, |(_, r)| extended_path(r));
    let naive_ns = time_path(&samples, |(_, r)| naive_path(r));
    let forward_ns = time_path(&samples, |(aa, _)| rotation_from_axis_angle(aa));

    let mut agreed = 0;
    let mut max_angle_diff: f64 = 0.0;
    for (_, r) in &samples {
        let a = extended_path(r);
        let b = naive_path(r);
        let diff = wrapped_diff(a.angle, b.angle);
        max_angle_diff = max_angle_diff.max(diff);
        if a.axis == b.axis && diff <= AGREEMENT_TOL {
            agreed += 1;
        }
    }

    Ok(BenchReport {
        seed,
        timings: [
            PathTiming {
                path: "extended",
                n,
                mean_ns: extended_ns,
            },
            PathTiming {
                path: "naive",
                n,
                mean_ns: naive_ns,
            },
            PathTiming {
                path: "forward",
                n,
                mean_ns: forward_ns,
            },
        ],
        agreement: Agreement {
            samples: n,
            agreed,
            max_angle_diff,
        },
    })
}
