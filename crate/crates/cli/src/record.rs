//! Wire records: one JSON object per line.
//!
//! Input carries either `"matrix": [9 numbers, row-major]` or
//! `"axis": [x, y, z], "angle": radians`, plus an optional `"id"`. Output
//! echoes the id (or the 1-based line number when absent).

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// What an input record describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Representation {
    Matrix([f64; 9]),
    AxisAngle { axis: [f64; 3], angle: f64 },
}

/// A parsed input line.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordIn {
    pub id: Value,
    pub repr: Representation,
}

/// A line that could not be turned into a [`RecordIn`].
#[derive(Debug, Clone, PartialEq)]
pub struct RecordError {
    pub id: Value,
    pub message: String,
}

#[derive(Deserialize)]
struct RawRecord {
    id: Option<Value>,
    matrix: Option<Vec<f64>>,
    axis: Option<Vec<f64>>,
    angle: Option<f64>,
}

/// Parses one line. `line_no` is 1-based and stands in for a missing id.
pub fn parse_record(line: &str, line_no: usize) -> Result<RecordIn, RecordError> {
    let fallback = Value::from(line_no);
    let raw: RawRecord = serde_json::from_str(line).map_err(|e| RecordError {
        id: fallback.clone(),
        message: format!("malformed JSON: {e}"),
    })?;
    let id = match raw.id {
        Some(Value::Null) | None => fallback,
        Some(id) => id,
    };
    let fail = |message: String| RecordError {
        id: id.clone(),
        message,
    };

    let repr = match (raw.matrix, raw.axis, raw.angle) {
        (Some(m), None, None) => {
            let m: [f64; 9] = m.try_into().map_err(|m: Vec<f64>| {
                fail(format!("matrix must have 9 entries, got {}", m.len()))
            })?;
            Representation::Matrix(m)
        }
        (None, Some(axis), Some(angle)) => {
            let axis: [f64; 3] = axis.try_into().map_err(|a: Vec<f64>| {
                fail(format!("axis must have 3 entries, got {}", a.len()))
            })?;
            Representation::AxisAngle { axis, angle }
        }
        (None, Some(_), None) => return Err(fail("axis given without angle".into())),
        (None, None, Some(_)) => return Err(fail("angle given without axis".into())),
        (None, None, None) => return Err(fail("record needs either matrix or axis+angle".into())),
        (Some(_), _, _) => {
            return Err(fail(
                "record has both matrix and axis/angle; give exactly one".into(),
            ))
        }
    };

    let finite = match &repr {
        Representation::Matrix(m) => m.iter().all(|x| x.is_finite()),
        Representation::AxisAngle { axis, angle } => {
            axis.iter().all(|x| x.is_finite()) && angle.is_finite()
        }
    };
    if !finite {
        return Err(fail("non-finite value".into()));
    }
    Ok(RecordIn { id, repr })
}

/// An in-stream error line: `{"id": ..., "error": "..."}`.
#[derive(Debug, Serialize)]
pub struct ErrorOut<'a> {
    pub id: &'a Value,
    pub error: &'a str,
}

/// `aa2mat` output.
#[derive(Debug, Serialize)]
pub struct MatrixOut<'a> {
    pub id: &'a Value,
    pub matrix: [f64; 9],
}

/// `mat2aa` output.
#[derive(Debug, Serialize)]
pub struct AxisAngleOut<'a> {
    pub id: &'a Value,
    pub axis: [f64; 3],
    pub angle: f64,
    pub degeneracy: &'static str,
    pub residual_axis: f64,
    pub residual_reconstruction: f64,
    pub branch: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipped: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis_dot_previous: Option<f64>,
}

/// `roundtrip` per-record output.
#[derive(Debug, Serialize)]
pub struct ResidualOut<'a> {
    pub id: &'a Value,
    pub residual: f64,
    pub ok: bool,
}

/// `roundtrip` final line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub count: usize,
    pub max_residual: f64,
    pub failures: usize,
}

#[derive(Debug, Serialize)]
pub struct SummaryOut {
    pub summary: Summary,
}
