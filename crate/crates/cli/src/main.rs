use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rodrigues_cli::commands::parse_axis_arg;
use rodrigues_cli::{aa2mat, bench, mat2aa, roundtrip, CliError, Options, TrackOptions};
use rodrigues_core::{Tolerances, UnitVector3};

/// Rotation matrix <-> axis-angle conversion over JSON lines.
#[derive(Debug, Parser)]
#[command(name = "rodrigues", version)]
struct Args {
    /// Read records from PATH instead of stdin.
    #[arg(long = "in", value_name = "PATH", global = true)]
    input: Option<PathBuf>,

    /// Write records to PATH instead of stdout.
    #[arg(long = "out", value_name = "PATH", global = true)]
    output: Option<PathBuf>,

    /// Angles on the wire are degrees.
    #[arg(long, global = true)]
    degrees: bool,

    /// Orthogonality and determinant tolerance for input matrices; also widens the trace clamp.
    #[arg(long, value_name = "FLOAT", global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Axis-angle records to matrices.
    Aa2mat,
    /// Matrix records to axis-angle.
    Mat2aa {
        /// Treat records as an ordered stream and keep the axis continuous.
        #[arg(long)]
        track: bool,
        /// Seed the continuity state with this axis (implies --track).
        #[arg(long, value_name = "X,Y,Z", allow_hyphen_values = true, value_parser = parse_axis_arg)]
        prev_axis: Option<UnitVector3>,
    },
    /// Convert each record to the other representation and back.
    Roundtrip,
    /// Time the extended, naive and forward conversion paths.
    Bench {
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn open_input(path: &Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(io::stdin().lock()),
    })
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(args: Args) -> Result<i32, CliError> {
    let tolerances = match args.tol {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")))
        }
        // a matrix that is only t-orthogonal has a trace off by O(t)
        Some(t) => Tolerances {
            orthogonality: t,
            determinant: t,
            clamp: Tolerances::DEFAULT.clamp.max(2.0 * t),
            ..Tolerances::DEFAULT
        },
        None => Tolerances::DEFAULT,
    };
    let opts = Options {
        degrees: args.degrees,
        tolerances,
    };

    let outcome = match args.command {
        Command::Bench { n, seed } => {
            let report = bench::run_bench(n as usize, seed)?;
            report.write(open_output(&args.output)?)?;
            return Ok(if report.all_agree() { 0 } else { 1 });
        }
        Command::Aa2mat => aa2mat(open_input(&args.input)?, open_output(&args.output)?, &opts)?,
        Command::Mat2aa { track, prev_axis } => mat2aa(
            open_input(&args.input)?,
            open_output(&args.output)?,
            &opts,
            &TrackOptions { track, prev_axis },
        )?,
        Command::Roundtrip => {
            roundtrip(open_input(&args.input)?, open_output(&args.output)?, &opts)?
        }
    };
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rodrigues: {e}");
            ExitCode::from(2)
        }
    }
}
