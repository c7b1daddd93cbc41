//! JSON-lines front end for `rodrigues-core`: batch conversion in both
//! directions, round-trip validation, and a small benchmark.

pub mod bench;
pub mod commands;
pub mod format;
pub mod record;
pub mod sample;

use std::io;

use thiserror::Error;

pub use commands::{aa2mat, mat2aa, roundtrip, Options, Outcome, TrackOptions};

/// Failures that stop a whole run (exit code 2). Record-level problems are
/// reported in-stream instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("usage: {0}")]
    Usage(String),
}
