//! End-to-end acceptance suite: one test and one printed PASS/FAIL line per
//! criterion. Run with `--nocapture` to see the lines for passing tests.

mod common;

use std::f64::consts::PI;
use std::process::Command;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgewave::asymptotics::diffraction_factors;
use edgewave::error::EdgewaveError;
use edgewave::geometry::{
    equiphase_circle, extremal_z_lines, shadow_boundary, singularity_lines, BoundaryKind,
};
use edgewave::kinematics::{transform_wave, LabPoint, Motion, WaveParams};
use edgewave::lab::lab_field_total;
use edgewave::sommerfeld::total_field_primed;
use edgewave::special::eval_g;
use edgewave::validation::{boundary_residual, convergence_scan, loglog_slope, maxwell_residual, SampleRegion};

fn report(n: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "criterion {n} ({name}): {}{}",
        if ok { "PASS" } else { "FAIL" },
        if detail.is_empty() { String::new() } else { format!(" [{detail}]") }
    );
    assert!(ok, "criterion {n} ({name}) failed: {detail}");
}

fn wave(k: f64, theta: f64, a1: Complex64, a2: Complex64) -> WaveParams {
    WaveParams::new(k, theta, a1, a2, 1.0).unwrap()
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[test]
fn criterion_1_edge_integral_vs_quadrature_oracle() {
    let mut worst = 0.0f64;
    let mut worst_refl = 0.0f64;
    for i in 0..400 {
        let a = -20.0 + 40.0 * i as f64 / 399.0;
        let g = eval_g(a).unwrap();
        worst = worst.max((g - common::g_oracle(a)).norm());
        if a > 0.0 {
            let (s, c) = (a * a).sin_cos();
            let rhs = 1.772_453_850_905_516
                * Complex64::new(std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2)
                * Complex64::new(c, -s);
            worst_refl = worst_refl.max((eval_g(a).unwrap() + eval_g(-a).unwrap() - rhs).norm());
        }
    }
    report(
        1,
        "edge integral vs quadrature oracle",
        worst <= 1e-10 && worst_refl <= 1e-11,
        &format!("max |dG| = {worst:.2e}, reflection = {worst_refl:.2e}"),
    );
}

#[test]
fn criterion_2_boundary_conditions() {
    let mut worst = 0.0f64;
    let thetas: Vec<f64> = [30.0f64, -30.0, 90.0, -90.0, 150.0, -150.0]
        .iter()
        .map(|d| d.to_radians())
        .collect();
    let krhos = [0.1, 0.5, 2.0, 10.0, 30.0, 100.0];
    for &beta in &[0.0, 0.3, -0.3, 0.9] {
        let m = Motion::new(beta).unwrap();
        for &theta in &thetas {
            for (a1, a2) in [(ONE, ZERO), (ZERO, ONE)] {
                let w = wave(1.0, theta, a1, a2);
                let kp = transform_wave(&w, &m).k_prime;
                let rhos: Vec<f64> = krhos.iter().map(|kr| kr / kp).collect();
                let rep = boundary_residual(&w, &m, &rhos).unwrap();
                worst = worst.max(rep.max_abs_residual);
            }
        }
    }
    report(
        2,
        "perfect-conductor boundary conditions",
        worst <= 1e-10,
        &format!("max relative residual = {worst:.2e}"),
    );
}

#[test]
fn criterion_3_stationary_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let w = wave(2.0, 2.0 * PI / 3.0, ONE, Complex64::new(0.5, 0.2));
    let m = Motion::new(0.0).unwrap();
    let pw = transform_wave(&w, &m);
    let mut worst = 0.0f64;
    let mut n = 0;
    while n < 10_000 {
        let x: f64 = rng.gen_range(-30.0..30.0);
        let z: f64 = rng.gen_range(-30.0..30.0);
        let t: f64 = rng.gen_range(-10.0..10.0);
        if x.hypot(z) < 1e-3 {
            continue;
        }
        n += 1;
        let lab = lab_field_total(&LabPoint::new(x, z, t), &w, &m).unwrap();
        let pp = edgewave::kinematics::lab_to_primed(&LabPoint::new(x, z, t), &m, 1.0);
        let classical = total_field_primed(&pp, &pw).unwrap();
        let denom = classical.max_abs().max(1e-3);
        worst = worst.max(lab.sub(&classical).max_abs() / denom);
    }
    report(
        3,
        "stationary reduction to the classical field",
        worst <= 1e-12,
        &format!("max relative deviation = {worst:.2e} over 10^4 points"),
    );
}

#[test]
fn criterion_4_boost_oracle_equivalence() {
    let mut worst = 0.0f64;
    for &beta in &[0.3, -0.3, 0.6, -0.6, 0.9] {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = Motion::new(beta).unwrap();
        let w = wave(2.0, 0.8, ONE, Complex64::new(0.7, -0.3));
        let mut n = 0;
        while n < 1000 {
            let x: f64 = rng.gen_range(-20.0..20.0);
            let z: f64 = rng.gen_range(-20.0..20.0);
            let t: f64 = rng.gen_range(-5.0..5.0);
            let p = LabPoint::new(x, z, t);
            let pp = edgewave::kinematics::lab_to_primed(&p, &m, 1.0);
            if pp.rho_prime < 1e-3 {
                continue;
            }
            n += 1;
            let direct = lab_field_total(&p, &w, &m).unwrap();
            let boosted = common::boosted_lab_field(&p, &w, &m);
            let denom = boosted.max_abs().max(1e-3);
            worst = worst.max(direct.sub(&boosted).max_abs() / denom);
        }
    }
    report(
        4,
        "closed-form lab field vs numeric boost oracle",
        worst <= 1e-10,
        &format!("max relative deviation = {worst:.2e}"),
    );
}

#[test]
fn criterion_5_maxwell_residual_convergence() {
    let region = SampleRegion {
        x_min: 0.6,
        x_max: 2.4,
        nx: 10,
        z_min: 0.4,
        z_max: 1.4,
        nz: 5,
    };
    let hs = [8e-3, 4e-3, 2e-3, 1e-3];
    let mut detail = String::new();
    let mut ok = true;
    for &beta in &[0.0, 0.6] {
        let m = Motion::new(beta).unwrap();
        let w = wave(2.0, 2.0 * PI / 3.0, ONE, Complex64::new(0.6, 0.0));
        let res: Vec<f64> = hs
            .iter()
            .map(|&h| {
                maxwell_residual(&w, &m, 0.2, &region, Some(h))
                    .unwrap()
                    .max_abs_residual
            })
            .collect();
        let slope = loglog_slope(&hs, &res).unwrap();
        ok &= (slope - 2.0).abs() <= 0.2;
        detail.push_str(&format!("beta={beta}: slope {slope:.3}; "));
    }
    report(5, "curl-equation residuals are O(h^2)", ok, detail.trim_end());
}

#[test]
fn criterion_6_asymptotic_convergence_rate() {
    let dirs: Vec<f64> = [20.0f64, 130.0, 170.0, -20.0, -130.0, -170.0]
        .iter()
        .map(|d| d.to_radians())
        .collect();
    let krhos = [1e2, 3e2, 1e3, 3e3, 1e4];
    let mut ok = true;
    let mut detail = String::new();
    for &beta in &[0.0, 0.6] {
        let m = Motion::new(beta).unwrap();
        let w = wave(1.0, 2.0 * PI / 3.0, ONE, Complex64::new(0.8, 0.0));
        let scan = convergence_scan(&w, &m, 0.3, &dirs, &krhos).unwrap();
        ok &= (scan.slope + 1.0).abs() <= 0.3;
        detail.push_str(&format!("beta={beta}: slope {:.3}; ", scan.slope));
    }
    report(6, "decomposition error decays like 1/(k rho)", ok, detail.trim_end());
}

#[test]
fn criterion_7_geometry_identities() {
    let mut ok = true;
    let mut detail = String::new();

    // (a) singularity rays coincide with shadow boundaries, and the
    // ray-factor evaluation actually blows up on them
    let mut worst_dir = 0.0f64;
    let mut blowup_ok = true;
    for i in 0..20 {
        let beta = -0.9 + 1.8 * i as f64 / 19.0;
        let m = Motion::new(beta).unwrap();
        for j in 0..20 {
            let theta = -2.9 + 5.8 * j as f64 / 19.0;
            let w = wave(1.0, theta, ONE, ONE);
            let [si, sr] = singularity_lines(&w, &m, 0.3);
            let bi = shadow_boundary(BoundaryKind::Incident, &w, &m, 0.3);
            let br = shadow_boundary(BoundaryKind::Reflected, &w, &m, 0.3);
            for (s, b) in [(si, bi), (sr, br)] {
                worst_dir = worst_dir
                    .max((s.direction[0] - b.direction[0]).abs())
                    .max((s.direction[1] - b.direction[1]).abs());
                let p = LabPoint::new(
                    b.origin[0] + 2.0 * b.direction[0],
                    b.origin[1] + 2.0 * b.direction[1],
                    0.3,
                );
                blowup_ok &= matches!(
                    diffraction_factors(&p, &w, &m),
                    Err(EdgewaveError::SingularityLine)
                );
            }
        }
    }
    ok &= worst_dir <= 1e-12 && blowup_ok;
    detail.push_str(&format!("ray coincidence {worst_dir:.1e}, divergence detected: {blowup_ok}; "));

    // (b) + (c) equiphase points lie on the reported circle, whose center
    // trails the edge by beta * radius
    let mut worst_circle = 0.0f64;
    let mut worst_phase = 0.0f64;
    let mut worst_offset = 0.0f64;
    for &(beta, c_level, t) in &[(0.5, 1.0, 0.0), (0.3, 0.7, 1.5), (-0.6, 2.0, 0.8), (0.8, 0.4, 2.0)] {
        let m = Motion::new(beta).unwrap();
        let gamma = m.gamma();
        let w = wave(1.0, 1.0, ONE, ONE);
        let circle = equiphase_circle(c_level, &w, &m, t).unwrap();
        worst_offset = worst_offset
            .max(((m.edge_x(1.0, t) - circle.center[0]).abs() - beta.abs() * circle.radius).abs());
        let mut s_ref: Option<Complex64> = None;
        for n in 0..50 {
            // sample the constant-phase locus r + beta x - c t = const
            let psi = -PI + 2.0 * PI * (n as f64 + 0.5) / 50.0;
            let (u, wv) = (psi.cos(), psi.sin());
            let r = (c_level + t / (gamma * gamma)) / (1.0 + beta * u);
            if r <= 1e-6 {
                continue;
            }
            let x = m.edge_x(1.0, t) + r * u;
            let z = gamma * r * wv;
            worst_circle = worst_circle
                .max(((x - circle.center[0]).hypot(z - circle.center[1]) - circle.radius).abs());
            let f = diffraction_factors(&LabPoint::new(x, z, t), &w, &m).unwrap();
            match s_ref {
                None => s_ref = Some(f.s),
                Some(s0) => worst_phase = worst_phase.max((f.s - s0).norm()),
            }
        }
    }
    ok &= worst_circle <= 1e-10 && worst_phase <= 1e-9 && worst_offset <= 1e-12;
    detail.push_str(&format!(
        "circle {worst_circle:.1e}, phase spread {worst_phase:.1e}, offset {worst_offset:.1e}; "
    ));

    // (d) the longitudinal factor h3 vanishes on the extremal-z rays
    let mut worst_h3 = 0.0f64;
    for i in 1..20 {
        let beta = -0.9 + 1.8 * i as f64 / 19.0;
        if beta.abs() < 1e-3 {
            continue;
        }
        let m = Motion::new(beta).unwrap();
        let w = wave(1.0, 0.9, ONE, ONE);
        let lines = extremal_z_lines(&w, &m, 0.4).unwrap();
        for line in [lines.upper, lines.lower] {
            for &s in &[0.5, 2.0, 10.0] {
                let p = LabPoint::new(
                    line.origin[0] + s * line.direction[0],
                    line.origin[1] + s * line.direction[1],
                    0.4,
                );
                let f = diffraction_factors(&p, &w, &m).unwrap();
                worst_h3 = worst_h3.max(f.h3.abs() / s);
            }
        }
    }
    ok &= worst_h3 <= 1e-12;
    detail.push_str(&format!("h3 on extremal rays {worst_h3:.1e}"));

    report(7, "geometric loci identities", ok, &detail);
}

#[test]
fn criterion_8_aberration_doppler_spot_values() {
    let m = Motion::new(0.6).unwrap();
    let pw = transform_wave(&wave(1.0, PI / 2.0, ONE, ZERO), &m);
    let d_theta = (pw.theta_prime - (PI / 2.0 - 0.6f64.asin())).abs();
    let m2 = Motion::new(0.5).unwrap();
    let pw2 = transform_wave(&wave(1.0, 0.0, ONE, ZERO), &m2);
    let d_k = (pw2.k_prime - 3.0f64.sqrt()).abs();
    report(
        8,
        "aberration and Doppler closed forms",
        d_theta <= 1e-14 && d_k <= 1e-14,
        &format!("|d theta'| = {d_theta:.1e}, |d k'| = {d_k:.1e}"),
    );
}

#[test]
fn criterion_9_cli_reproducibility() {
    let bin = env!("CARGO_BIN_EXE_edgewave");
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str], out: &std::path::Path| {
        let status = Command::new(bin)
            .args(args)
            .arg("--output")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success(), "{args:?}");
        std::fs::read(out).unwrap()
    };
    let stationary = [
        "fieldmap", "--k", "2", "--theta-deg", "120", "--beta", "0", "--a1-re", "1", "--a2-re",
        "0.5", "--time", "0.25", "--x-min", "-2", "--x-max", "2", "--nx", "9", "--z-min", "-2",
        "--z-max", "2", "--nz", "9",
    ];
    let a = run(&stationary, &dir.path().join("a.csv"));
    let b = run(&stationary, &dir.path().join("b.csv"));
    let identical_fieldmap = a == b;
    let golden = std::fs::read(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/data/stationary_fieldmap.csv"
    ))
    .unwrap();
    let matches_golden = a == golden;

    let mut identical_rest = true;
    for args in [
        vec!["decompose", "--k", "2", "--theta-deg", "120", "--beta", "0.4", "--x-min", "0.5",
             "--x-max", "2", "--nx", "4", "--z-min", "0.5", "--z-max", "2", "--nz", "4"],
        vec!["geometry", "--k", "1", "--theta-deg", "60", "--beta", "0.5", "--c-levels", "0.5,1,2"],
        vec!["convergence", "--k", "1", "--theta-deg", "120", "--beta", "0.3",
             "--directions-deg", "20,170,-150", "--k-rho", "30,100,300"],
        vec!["validate", "--k", "2", "--theta-deg", "120", "--beta", "0.3", "--x-min", "1",
             "--x-max", "1.5", "--z-min", "0.8", "--z-max", "1.2", "--nx", "2", "--nz", "2"],
    ] {
        let a = run(&args.iter().map(|s| *s).collect::<Vec<_>>(), &dir.path().join("r1"));
        let b = run(&args.iter().map(|s| *s).collect::<Vec<_>>(), &dir.path().join("r2"));
        identical_rest &= a == b;
    }
    report(
        9,
        "command-line reproducibility",
        identical_fieldmap && matches_golden && identical_rest,
        &format!(
            "fieldmap rerun identical: {identical_fieldmap}, golden match: {matches_golden}, other commands identical: {identical_rest}"
        ),
    );
}
