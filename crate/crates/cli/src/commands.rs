//! The `aa2mat`, `mat2aa` and `roundtrip` subcommands.
//!
//! Each reads JSON lines, writes one output line per non-blank input line in
//! the same order, and reports bad records in-stream. Stateless commands
//! process records in parallel chunks; `mat2aa --track` is a sequential fold.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use rodrigues_core::{
    matrix_to_axis_angle_with, rotation_from_axis_angle, AxisAngle, ExtractionThresholds,
    RotationMatrix, Tolerances, Tracker, UnitVector3, Vector3,
};
use serde_json::Value;

use crate::format::to_line;
use crate::record::{
    parse_record, AxisAngleOut, ErrorOut, MatrixOut, RecordIn, Representation, ResidualOut,
    Summary, SummaryOut,
};
use crate::CliError;

/// Input axes within this distance of unit length are renormalized.
pub const AXIS_NORM_SLACK: f64 = 1e-6;
/// `roundtrip` fails a record whose residual exceeds this.
pub const ROUNDTRIP_TOL: f64 = 1e-9;

const CHUNK: usize = 4096;

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    /// Angles on the wire are degrees instead of radians.
    pub degrees: bool,
    pub tolerances: Tolerances,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            degrees: false,
            tolerances: Tolerances::DEFAULT,
        }
    }
}

impl Options {
    fn angle_in(&self, angle: f64) -> f64 {
        if self.degrees {
            angle.to_radians()
        } else {
            angle
        }
    }

    fn angle_out(&self, angle: f64) -> f64 {
        if self.degrees {
            angle.to_degrees()
        } else {
            angle
        }
    }
}

/// `mat2aa` continuity settings. A seed axis implies tracking.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TrackOptions {
    pub track: bool,
    pub prev_axis: Option<UnitVector3>,
}

/// What a run produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub records: usize,
    pub failures: usize,
    /// Present for `roundtrip` only.
    pub summary: Option<Summary>,
}

impl Outcome {
    /// 0 when every record succeeded, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures == 0 {
            0
        } else {
            1
        }
    }
}

struct Processed {
    line: Vec<u8>,
    failed: bool,
    residual: Option<f64>,
}

impl Processed {
    fn ok(line: Vec<u8>) -> Self {
        Processed {
            line,
            failed: false,
            residual: None,
        }
    }

    fn error(id: &Value, message: &str) -> Self {
        Processed {
            line: to_line(&ErrorOut { id, error: message }),
            failed: true,
            residual: None,
        }
    }
}

/// Reads non-blank lines in chunks, tagging each with its 1-based line number.
fn for_each_chunk<R: BufRead>(
    input: R,
    mut f: impl FnMut(&[(usize, String)]) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let mut chunk = Vec::with_capacity(CHUNK);
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        chunk.push((i + 1, line));
        if chunk.len() == CHUNK {
            f(&chunk)?;
            chunk.clear();
        }
    }
    if !chunk.is_empty() {
        f(&chunk)?;
    }
    Ok(())
}

#[derive(Default)]
struct Tally {
    records: usize,
    failures: usize,
    max_residual: f64,
}

impl Tally {
    fn write<W: Write>(&mut self, output: &mut W, p: &Processed) -> Result<(), CliError> {
        output.write_all(&p.line)?;
        self.records += 1;
        self.failures += usize::from(p.failed);
        if let Some(r) = p.residual {
            self.max_residual = self.max_residual.max(r);
        }
        Ok(())
    }

    fn outcome(&self) -> Outcome {
        Outcome {
            records: self.records,
            failures: self.failures,
            summary: None,
        }
    }
}

fn run_parallel<R: BufRead, W: Write>(
    input: R,
    output: &mut W,
    f: impl Fn(&str, usize) -> Processed + Sync,
) -> Result<Tally, CliError> {
    let mut tally = Tally::default();
    for_each_chunk(input, |chunk| {
        let done: Vec<Processed> = chunk.par_iter().map(|(no, line)| f(line, *no)).collect();
        done.iter().try_for_each(|p| tally.write(output, p))
    })?;
    Ok(tally)
}

fn read_axis(axis: [f64; 3]) -> Result<UnitVector3, String> {
    let [x, y, z] = axis;
    UnitVector3::new(x, y, z)
        .or_else(|_| {
            UnitVector3::new_with(x, y, z, AXIS_NORM_SLACK)
                .and_then(|u| UnitVector3::normalize(u.as_vector()))
        })
        .map_err(|e| e.to_string())
}

fn read_axis_angle(rec: &RecordIn, opts: &Options) -> Result<AxisAngle, String> {
    match rec.repr {
        Representation::AxisAngle { axis, angle } => Ok(AxisAngle {
            axis: read_axis(axis)?,
            angle: opts.angle_in(angle),
        }),
        Representation::Matrix(_) => Err("expected axis+angle, got matrix".into()),
    }
}

fn read_matrix(rec: &RecordIn, opts: &Options) -> Result<RotationMatrix, String> {
    match rec.repr {
        Representation::Matrix(m) => {
            RotationMatrix::new_with(m, &opts.tolerances).map_err(|e| e.to_string())
        }
        Representation::AxisAngle { .. } => Err("expected matrix, got axis+angle".into()),
    }
}

/// Axis-angle records to matrices.
pub fn aa2mat<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let tally = run_parallel(input, &mut output, |line, no| {
        let rec = match parse_record(line, no) {
            Ok(rec) => rec,
            Err(e) => return Processed::error(&e.id, &e.message),
        };
        match read_axis_angle(&rec, opts) {
            Ok(aa) => Processed::ok(to_line(&MatrixOut {
                id: &rec.id,
                matrix: rotation_from_axis_angle(&aa).to_array(),
            })),
            Err(msg) => Processed::error(&rec.id, &msg),
        }
    })?;
    output.flush()?;
    Ok(tally.outcome())
}

fn convert_one(rec: &RecordIn, opts: &Options) -> Result<Vec<u8>, String> {
    let r = read_matrix(rec, opts)?;
    let rep = matrix_to_axis_angle_with(&r, &ExtractionThresholds::DEFAULT, &opts.tolerances)
        .map_err(|e| e.to_string())?;
    Ok(to_line(&AxisAngleOut {
        id: &rec.id,
        axis: rep.result.axis.to_array(),
        angle: opts.angle_out(rep.result.angle),
        degeneracy: rep.degeneracy.as_str(),
        residual_axis: rep.residual_axis,
        residual_reconstruction: rep.residual_reconstruction,
        branch: rep.branch_note.as_str(),
        flipped: None,
        axis_dot_previous: None,
    }))
}

/// Matrix records to axis-angle, optionally as a continuity-tracked stream.
pub fn mat2aa<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    opts: &Options,
    track: &TrackOptions,
) -> Result<Outcome, CliError> {
    if !track.track && track.prev_axis.is_none() {
        let tally = run_parallel(input, &mut output, |line, no| {
            match parse_record(line, no) {
                Ok(rec) => match convert_one(&rec, opts) {
                    Ok(out) => Processed::ok(out),
                    Err(msg) => Processed::error(&rec.id, &msg),
                },
                Err(e) => Processed::error(&e.id, &e.message),
            }
        })?;
        output.flush()?;
        return Ok(tally.outcome());
    }

    let mut tracker = match track.prev_axis {
        Some(axis) => Tracker::seeded(axis),
        None => Tracker::new(),
    }
    .tolerances(opts.tolerances);
    let mut tally = Tally::default();
    for_each_chunk(input, |chunk| {
        for (no, line) in chunk {
            let processed = match parse_record(line, *no) {
                Err(e) => Processed::error(&e.id, &e.message),
                Ok(rec) => match read_matrix(&rec, opts)
                    .and_then(|r| tracker.push(&r).map_err(|e| e.to_string()))
                {
                    Ok(s) => Processed::ok(to_line(&AxisAngleOut {
                        id: &rec.id,
                        axis: s.axis_angle.axis.to_array(),
                        angle: opts.angle_out(s.axis_angle.angle),
                        degeneracy: s.degeneracy.as_str(),
                        residual_axis: s.residual_axis,
                        residual_reconstruction: s.residual_reconstruction,
                        branch: s.branch_note.as_str(),
                        flipped: Some(s.flipped),
                        axis_dot_previous: s.axis_dot_previous,
                    })),
                    Err(msg) => Processed::error(&rec.id, &msg),
                },
            };
            tally.write(&mut output, &processed)?;
        }
        Ok(())
    })?;
    output.flush()?;
    Ok(tally.outcome())
}

/// Max-norm distance between the rotation vectors `θ n` of two axis-angle
/// pairs, after aligning the recovered branch with the original axis.
fn axis_angle_residual(original: &AxisAngle, opts: &Options) -> Result<f64, String> {
    let original = original.canonical();
    let r = rotation_from_axis_angle(&original);
    let recovered = Tracker::seeded(original.axis)
        .tolerances(opts.tolerances)
        .push(&r)
        .map_err(|e| e.to_string())?
        .axis_angle;
    let rotvec = |aa: &AxisAngle| aa.axis.as_vector() * aa.angle;
    Ok((rotvec(&original) - rotvec(&recovered)).max_abs())
}

fn matrix_residual(r: &RotationMatrix, opts: &Options) -> Result<f64, String> {
    let rep = matrix_to_axis_angle_with(r, &ExtractionThresholds::DEFAULT, &opts.tolerances)
        .map_err(|e| e.to_string())?;
    Ok(rep.residual_reconstruction)
}

fn roundtrip_one(rec: &RecordIn, opts: &Options) -> Result<f64, String> {
    match rec.repr {
        Representation::Matrix(_) => matrix_residual(&read_matrix(rec, opts)?, opts),
        Representation::AxisAngle { .. } => axis_angle_residual(&read_axis_angle(rec, opts)?, opts),
    }
}

/// Converts each record to the other representation and back, emitting the
/// per-record residual and a closing summary line.
///
/// Matrix records report `‖R − R'‖_max`; axis-angle records report the
/// max-norm difference of the rotation vectors `θ n`.
pub fn roundtrip<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let tally = run_parallel(input, &mut output, |line, no| {
        let rec = match parse_record(line, no) {
            Ok(rec) => rec,
            Err(e) => return Processed::error(&e.id, &e.message),
        };
        match roundtrip_one(&rec, opts) {
            Ok(residual) => {
                let ok = residual <= ROUNDTRIP_TOL;
                Processed {
                    line: to_line(&ResidualOut {
                        id: &rec.id,
                        residual,
                        ok,
                    }),
                    failed: !ok,
                    residual: Some(residual),
                }
            }
            Err(msg) => Processed::error(&rec.id, &msg),
        }
    })?;
    let summary = Summary {
        count: tally.records,
        max_residual: tally.max_residual,
        failures: tally.failures,
    };
    output.write_all(&to_line(&SummaryOut { summary }))?;
    output.flush()?;
    Ok(Outcome {
        summary: Some(summary),
        ..tally.outcome()
    })
}

/// Parses `X,Y,Z` and scales it to unit length.
pub fn parse_axis_arg(s: &str) -> Result<UnitVector3, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("expected X,Y,Z: {e}"))?;
    let [x, y, z]: [f64; 3] = parts
        .try_into()
        .map_err(|p: Vec<f64>| format!("expected 3 components, got {}", p.len()))?;
    UnitVector3::normalize(Vector3::new(x, y, z)).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prev_axis_argument() {
        let u = parse_axis_arg("-0.707,-0.707,0").unwrap();
        assert!((u.x() + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(parse_axis_arg("1,2").is_err());
        assert!(parse_axis_arg("0,0,0").is_err());
        assert!(parse_axis_arg("a,b,c").is_err());
    }

    #[test]
    fn axis_within_slack_is_renormalized() {
        let u = read_axis([0.0, 0.0, 1.0 + 5e-7]).unwrap();
        assert_eq!(u.z(), 1.0);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(read_axis([h, h, 0.0]).unwrap().to_array(), [h, h, 0.0]);
        assert!(read_axis([0.0, 0.0, 1.0 + 5e-6])
            .unwrap_err()
            .contains("non-unit axis"));
    }

    #[test]
    fn blank_lines_are_skipped_but_counted_for_ids() {
        let input = "\n{\"axis\":[0,0,1],\"angle\":0}\n\n{\"axis\":[0,0,1],\"angle\":0}\n";
        let mut out = Vec::new();
        let o = aa2mat(input.as_bytes(), &mut out, &Options::default()).unwrap();
        assert_eq!(o.records, 2);
        let text = String::from_utf8(out).unwrap();
        let ids: Vec<Value> = text
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap()["id"].clone())
            .collect();
        assert_eq!(ids, vec![Value::from(2), Value::from(4)]);
    }
}
