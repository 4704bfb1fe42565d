//! Behavioral tests of the `edgewave` binary: exit codes, config merging,
//! and output formats.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edgewave"))
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = bin().arg(flag).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{flag}");
    }
}

#[test]
fn missing_required_arguments_exit_one() {
    // no subcommand
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // fieldmap without a scenario
    let out = bin().arg("fieldmap").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // unknown flag
    let out = bin().args(["fieldmap", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // bad parameter value
    let out = bin()
        .args([
            "fieldmap", "--k", "-2", "--theta-deg", "90", "--x-min", "0", "--x-max", "1",
            "--z-min", "0.5", "--z-max", "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_output_exits_two() {
    let out = bin()
        .args([
            "geometry", "--k", "1", "--theta-deg", "90",
            "--output", "/no/such/dir/out.json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_breach_exits_three() {
    let out = bin()
        .args([
            "validate", "--k", "2", "--theta-deg", "120", "--beta", "0.3", "--x-min", "1",
            "--x-max", "1.5", "--z-min", "0.8", "--z-max", "1.2", "--nx", "2", "--nz", "2",
            "--tolerance", "1e-30",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // a realistic tolerance succeeds
    let out = bin()
        .args([
            "validate", "--k", "2", "--theta-deg", "120", "--beta", "0.3", "--x-min", "1",
            "--x-max", "1.5", "--z-min", "0.8", "--z-max", "1.2", "--nx", "2", "--nz", "2",
            "--tolerance", "1e-4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("scenario.json");
    std::fs::write(
        &cfg,
        r#"{
            "k": 2.0, "theta_deg": 120.0, "beta": 0.4,
            "a1": [1.0, 0.0], "a2": [0.5, 0.0], "time": 0.1,
            "grid": {"x_min": -1.0, "x_max": 1.0, "nx": 2,
                     "z_min": 0.5, "z_max": 1.0, "nz": 2}
        }"#,
    )
    .unwrap();
    let from_config = bin()
        .args(["fieldmap", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(from_config.status.code(), Some(0));
    let explicit = bin()
        .args([
            "fieldmap", "--k", "2", "--theta-deg", "120", "--beta", "0.4", "--a1-re", "1",
            "--a2-re", "0.5", "--time", "0.1", "--x-min", "-1", "--x-max", "1", "--nx", "2",
            "--z-min", "0.5", "--z-max", "1", "--nz", "2",
        ])
        .output()
        .unwrap();
    assert_eq!(from_config.stdout, explicit.stdout);
    // a flag beats the file
    let overridden = bin()
        .args(["fieldmap", "--config"])
        .arg(&cfg)
        .args(["--beta", "0"])
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
    assert_ne!(overridden.stdout, from_config.stdout);
    // unknown keys in the file are a usage error
    std::fs::write(&cfg, r#"{"k": 2.0, "thetadeg": 120.0}"#).unwrap();
    let bad = bin().args(["fieldmap", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn json_documents_carry_schema_version() {
    for args in [
        vec![
            "fieldmap", "--k", "2", "--theta-deg", "120", "--x-min", "0.5", "--x-max", "1",
            "--nx", "2", "--z-min", "0.5", "--z-max", "1", "--nz", "2", "--format", "json",
        ],
        vec!["geometry", "--k", "1", "--theta-deg", "60", "--beta", "0.5"],
        vec![
            "convergence", "--k", "1", "--theta-deg", "120", "--directions-deg", "20,170",
            "--k-rho", "30,100", "--format", "json",
        ],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["schema_version"], "1", "{args:?}");
    }
}

#[test]
fn convergence_near_boundary_direction_rejected() {
    let out = bin()
        .args([
            "convergence", "--k", "1", "--theta-deg", "120", "--beta", "0",
            "--directions-deg", "-61", "--k-rho", "30,100",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("shadow boundary"), "{err}");
}

#[test]
fn fieldmap_rows_are_z_major() {
    let out = bin()
        .args([
            "fieldmap", "--k", "2", "--theta-deg", "120", "--x-min", "0", "--x-max", "1",
            "--nx", "2", "--z-min", "1", "--z-max", "2", "--nz", "2",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let first_cols: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(2).map(str::to_string).collect())
        .collect();
    let xz: Vec<(f64, f64)> = first_cols
        .iter()
        .map(|c| (c[0].parse().unwrap(), c[1].parse().unwrap()))
        .collect();
    assert_eq!(xz, vec![(0.0, 1.0), (1.0, 1.0), (0.0, 2.0), (1.0, 2.0)]);
}
