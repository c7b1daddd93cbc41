use std::f64::consts::{FRAC_PI_6, PI};
use std::io::Cursor;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rodrigues_cli::bench::run_bench;
use rodrigues_cli::commands::{roundtrip, Options};
use rodrigues_cli::sample::{random_axis_angle, random_rotations};
use rodrigues_core::{
    angle_for_axis, cos_theta_from_trace, decompose, extract_axis, matrix_to_axis_angle,
    resolve_stream, rotate_vector, rotation_from_axis_angle, sin_theta_from_skew_product, skew,
    AxisAngle, BranchNote, Error, Matrix3, RotationMatrix, UnitVector3, Vector3,
    CONVENTIONAL_AXIS,
};

type Check = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vector3 {
    Vector3::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

fn golden_example() -> Check {
    let c = 3f64.sqrt() / 2.0;
    let q = 0.5 / 2f64.sqrt();
    let r = RotationMatrix::new([
        (1.0 + c) / 2.0,
        (1.0 - c) / 2.0,
        q,
        (1.0 - c) / 2.0,
        (1.0 + c) / 2.0,
        -q,
        -q,
        q,
        c,
    ])
    .map_err(|e| e.to_string())?;
    let n = UnitVector3::normalize(Vector3::new(1.0, 1.0, 0.0)).unwrap();
    let rep = matrix_to_axis_angle(&r).map_err(|e| e.to_string())?;
    let axis_err = (rep.result.axis.as_vector() - n.as_vector()).max_abs();
    let angle_err = (rep.result.angle - FRAC_PI_6).abs();
    let plus = angle_for_axis(n, &r).map_err(|e| e.to_string())?;
    let minus = angle_for_axis(-n, &r).map_err(|e| e.to_string())?;
    let branch_err = (plus - FRAC_PI_6).abs().max((minus + FRAC_PI_6).abs());
    let err = axis_err.max(angle_err).max(branch_err);
    ensure(err <= 1e-12, format!("max error {err:e}"))
}

fn sin_cos_accuracy() -> Check {
    let mut worst: f64 = 0.0;
    for (aa, r) in random_rotations(100_000, 1) {
        let cos = cos_theta_from_trace(&r).map_err(|e| e.to_string())?;
        let sin = sin_theta_from_skew_product(&skew(aa.axis), &r).map_err(|e| e.to_string())?;
        worst = worst
            .max((cos - aa.angle.cos()).abs())
            .max((sin - aa.angle.sin()).abs());
    }
    ensure(worst <= 1e-12, format!("max error {worst:e} over 100000"))
}

fn roundtrip_command() -> Check {
    let mut input = String::new();
    for (_, r) in random_rotations(100_000, 2) {
        let m: Vec<String> = r.to_array().iter().map(|x| format!("{x:?}")).collect();
        input.push_str(&format!("{{\"matrix\":[{}]}}\n", m.join(",")));
    }
    let mut out = Vec::new();
    let outcome = roundtrip(Cursor::new(input), &mut out, &Options::default())
        .map_err(|e| e.to_string())?;
    let summary = outcome.summary.ok_or("no summary")?;
    ensure(
        summary.count == 100_000 && summary.failures == 0 && summary.max_residual <= 1e-9,
        format!(
            "count {} failures {} max residual {:e}",
            summary.count, summary.failures, summary.max_residual
        ),
    )
}

fn degenerate_angles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let axis = random_axis_angle(&mut rng).axis;
        for angle in [1e-8, PI - 1e-8, PI] {
            let r = rotation_from_axis_angle(&AxisAngle { axis, angle });
            let rep = matrix_to_axis_angle(&r).map_err(|e| format!("θ={angle}: {e}"))?;
            worst = worst.max(rep.residual_reconstruction);
        }
        let identity = rotation_from_axis_angle(&AxisAngle { axis, angle: 0.0 });
        if extract_axis(&identity) != Err(Error::IdentityRotation) {
            return Err("θ=0 did not report an identity rotation".into());
        }
        let rep = matrix_to_axis_angle(&identity).map_err(|e| e.to_string())?;
        if rep.branch_note != BranchNote::ConventionalAxis
            || rep.result.axis != CONVENTIONAL_AXIS
            || rep.result.angle != 0.0
        {
            return Err("θ=0 did not fall back to the conventional axis".into());
        }
    }
    ensure(worst <= 1e-7, format!("max residual {worst:e}"))
}

fn algebraic_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let n = random_axis_angle(&mut rng).axis;
        let v = random_vector(&mut rng);
        let big_n = skew(n);
        let nn = big_n.squared();
        let outer = Matrix3::outer(&n.as_vector(), &n.as_vector());
        worst = worst.max(outer.max_abs_diff(&(Matrix3::IDENTITY + nn)));
        worst = worst.max((nn * *big_n.as_matrix()).max_abs_diff(&-*big_n.as_matrix()));
        let (par, perp) = decompose(n, &v);
        let nv = n.as_vector();
        let explicit = nv * nv.dot(&v) - nv.cross(&nv.cross(&v));
        worst = worst.max((par + perp - v).max_abs());
        worst = worst.max((explicit - v).max_abs());
    }
    ensure(worst <= 1e-14, format!("max error {worst:e} over 10000"))
}

fn precession_stream() -> Check {
    let tilt: f64 = 1.0;
    let step = 0.5f64.to_radians();
    let ms: Vec<[f64; 9]> = (0..720)
        .map(|k| {
            let phi = step * k as f64;
            let axis = UnitVector3::normalize(Vector3::new(
                tilt.sin() * phi.cos(),
                tilt.sin() * phi.sin(),
                tilt.cos(),
            ))
            .unwrap();
            rotation_from_axis_angle(&AxisAngle { axis, angle: 0.3 }).to_array()
        })
        .collect();
    let samples = resolve_stream(&ms).map_err(|e| e.to_string())?;
    let min_dot = samples
        .windows(2)
        .map(|p| p[0].axis_angle.axis.dot(&p[1].axis_angle.axis))
        .fold(f64::INFINITY, f64::min);
    let worst = samples
        .iter()
        .map(|s| s.residual_reconstruction)
        .fold(0.0, f64::max);
    ensure(
        min_dot > 0.99 && worst <= 1e-9,
        format!("min dot {min_dot:.6} max residual {worst:e}"),
    )
}

fn vector_form() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let aa = random_axis_angle(&mut rng);
        let v = random_vector(&mut rng);
        let direct = rotate_vector(&aa, &v);
        let via_matrix = rotation_from_axis_angle(&aa).mul_vector(&v);
        worst = worst.max((direct - via_matrix).max_abs());
    }
    ensure(worst <= 1e-12, format!("max error {worst:e} over 10000"))
}

fn bench_agreement() -> Check {
    let report = run_bench(100_000, 42).map_err(|e| e.to_string())?;
    let timings: Vec<String> = report
        .timings
        .iter()
        .map(|t| format!("{} {:.1} ns", t.path, t.mean_ns))
        .collect();
    let a = report.agreement;
    ensure(
        report.all_agree(),
        format!(
            "agreed {}/{} max diff {:e}; {}",
            a.agreed,
            a.samples,
            a.max_angle_diff,
            timings.join(", ")
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("golden example recovers axis and ±angle", golden_example),
        ("sinθ and cosθ from the matrix over 1e5 rotations", sin_cos_accuracy),
        ("roundtrip command over 1e5 matrices", roundtrip_command),
        ("near-zero, near-π and identity rotations", degenerate_angles),
        ("skew-matrix and vector identities", algebraic_identities),
        ("precessing axis stream stays continuous", precession_stream),
        ("vector form matches matrix form", vector_form),
        ("extended and naive paths agree", bench_agreement),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
