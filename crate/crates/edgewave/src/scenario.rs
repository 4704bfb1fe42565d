//! Batch evaluation over grids and serialization of the results.
//!
//! This is the machinery behind the `edgewave` binary: a scenario (wave +
//! motion + instant + grid) is swept point by point and written as CSV or
//! JSON. Rows are emitted in z-major order (outer loop over z, inner over
//! x), floats with 17 significant digits, so reruns are byte-identical.
//!
//! Points where a quantity is undefined are not errors of the sweep: they
//! are kept as rows with a non-`ok` status (`singular` at the edge or on a
//! ray-expansion singularity line, `boundary` on a shadow boundary) and
//! zeroed values.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::asymptotics::{decompose, local_frequency, FieldDecomposition};
use crate::error::{EdgewaveError, Result};
use crate::geometry::{
    equiphase_circle, extremal_z_lines, shadow_boundary, singularity_lines, BoundaryKind,
};
use crate::kinematics::{LabPoint, Motion, WaveParams};
use crate::lab::lab_field_total;
use crate::sommerfeld::EMField;
use crate::validation::{
    boundary_residual, convergence_scan, maxwell_residual, require_within, ResidualReport,
    SampleRegion,
};

/// File format version stamped into every JSON document.
pub const SCHEMA_VERSION: &str = "1";

/// Rectangular evaluation grid; `nx`/`nz` are point counts per axis.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub z_min: f64,
    pub z_max: f64,
    pub nz: usize,
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        let ok = self.nx >= 1
            && self.nz >= 1
            && self.x_min.is_finite()
            && self.x_max.is_finite()
            && self.z_min.is_finite()
            && self.z_max.is_finite()
            && self.x_max >= self.x_min
            && self.z_max >= self.z_min;
        if !ok {
            return Err(EdgewaveError::InvalidParameter {
                name: "grid",
                reason: "grid must have finite ordered bounds and at least one point per axis".into(),
            });
        }
        Ok(())
    }

    fn x(&self, i: usize) -> f64 {
        if self.nx == 1 {
            0.5 * (self.x_min + self.x_max)
        } else {
            self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
        }
    }

    fn z(&self, j: usize) -> f64 {
        if self.nz == 1 {
            0.5 * (self.z_min + self.z_max)
        } else {
            self.z_min + (self.z_max - self.z_min) * j as f64 / (self.nz - 1) as f64
        }
    }

    /// z-major iteration: all x for the first z, then the next z, ...
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.nz).flat_map(move |j| (0..self.nx).map(move |i| (self.x(i), self.z(j))))
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = EdgewaveError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(EdgewaveError::Usage(format!(
                "unknown output format '{other}' (expected csv or json)"
            ))),
        }
    }
}

/// Point status in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStatus {
    Ok,
    Singular,
    Boundary,
}

impl PointStatus {
    fn as_str(self) -> &'static str {
        match self {
            PointStatus::Ok => "ok",
            PointStatus::Singular => "singular",
            PointStatus::Boundary => "boundary",
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

const COMPONENTS: [&str; 6] = ["ex", "ey", "ez", "cbx", "cby", "cbz"];

fn field_values(f: &EMField) -> [Complex64; 6] {
    [f.e[0], f.e[1], f.e[2], f.cb[0], f.cb[1], f.cb[2]]
}

fn push_field_csv(cols: &mut Vec<String>, f: &EMField) {
    for v in field_values(f) {
        cols.push(fmt(v.re));
        cols.push(fmt(v.im));
    }
}

fn field_json(f: &EMField) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    for (name, v) in COMPONENTS.iter().zip(field_values(f)) {
        obj.insert(name.to_string(), json!([v.re, v.im]));
    }
    serde_json::Value::Object(obj)
}

fn scenario_json(w: &WaveParams, m: &Motion, t: f64) -> serde_json::Value {
    json!({
        "k": w.k,
        "theta": w.theta,
        "a1": [w.a1.re, w.a1.im],
        "a2": [w.a2.re, w.a2.im],
        "c": w.c,
        "beta": m.beta(),
        "t": t,
    })
}

fn classify(err: &EdgewaveError) -> Result<PointStatus> {
    match err {
        EdgewaveError::EdgeSingularity { .. } | EdgewaveError::SingularityLine => {
            Ok(PointStatus::Singular)
        }
        EdgewaveError::ShadowBoundary { .. } => Ok(PointStatus::Boundary),
        _ => Err(EdgewaveError::InvalidParameter {
            name: "sweep",
            reason: format!("unexpected failure during sweep: {err}"),
        }),
    }
}

/// Exact laboratory field on a grid.
pub fn run_fieldmap(
    out: &mut dyn Write,
    w: &WaveParams,
    m: &Motion,
    t: f64,
    grid: &Grid,
    format: OutputFormat,
) -> Result<()> {
    grid.validate()?;
    let mut rows = Vec::new();
    for (x, z) in grid.points() {
        let p = LabPoint::new(x, z, t);
        match lab_field_total(&p, w, m) {
            Ok(f) => rows.push((x, z, PointStatus::Ok, f)),
            Err(e) => rows.push((x, z, classify(&e)?, EMField::zero())),
        }
    }
    match format {
        OutputFormat::Csv => {
            let mut header = vec!["x".to_string(), "z".to_string(), "status".to_string()];
            for c in COMPONENTS {
                header.push(format!("{c}_re"));
                header.push(format!("{c}_im"));
            }
            writeln!(out, "{}", header.join(","))?;
            for (x, z, status, f) in &rows {
                let mut cols = vec![fmt(*x), fmt(*z), status.as_str().to_string()];
                push_field_csv(&mut cols, f);
                writeln!(out, "{}", cols.join(","))?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(x, z, status, f)| {
                    json!({
                        "x": x,
                        "z": z,
                        "status": status.as_str(),
                        "field": field_json(f),
                    })
                })
                .collect();
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "kind": "fieldmap",
                "scenario": scenario_json(w, m, t),
                "grid": grid,
                "rows": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

/// GO/diffracted decomposition on a grid, including the local instantaneous
/// frequency of the diffracted wave.
pub fn run_decompose(
    out: &mut dyn Write,
    w: &WaveParams,
    m: &Motion,
    t: f64,
    grid: &Grid,
    format: OutputFormat,
) -> Result<()> {
    grid.validate()?;
    struct Row {
        x: f64,
        z: f64,
        status: PointStatus,
        dec: Option<(FieldDecomposition, f64)>,
    }
    let mut rows = Vec::new();
    for (x, z) in grid.points() {
        let p = LabPoint::new(x, z, t);
        match decompose(&p, w, m) {
            Ok(dec) => {
                let omega = local_frequency(&p, w, m)?;
                rows.push(Row {
                    x,
                    z,
                    status: PointStatus::Ok,
                    dec: Some((dec, omega)),
                });
            }
            Err(e) => rows.push(Row {
                x,
                z,
                status: classify(&e)?,
                dec: None,
            }),
        }
    }
    let parts = ["go_incident", "go_reflected", "diffracted", "total"];
    let fields_of = |dec: &FieldDecomposition| {
        [dec.go_incident, dec.go_reflected, dec.diffracted, dec.total]
    };
    match format {
        OutputFormat::Csv => {
            let mut header = vec![
                "x".into(),
                "z".into(),
                "status".into(),
                "incident_lit".into(),
                "reflected_lit".into(),
                "local_omega".into(),
            ];
            for part in parts {
                for c in COMPONENTS {
                    header.push(format!("{part}_{c}_re"));
                    header.push(format!("{part}_{c}_im"));
                }
            }
            writeln!(out, "{}", header.join(","))?;
            for row in &rows {
                let mut cols = vec![fmt(row.x), fmt(row.z), row.status.as_str().to_string()];
                match &row.dec {
                    Some((dec, omega)) => {
                        cols.push(if dec.incident_lit { "1" } else { "0" }.into());
                        cols.push(if dec.reflected_lit { "1" } else { "0" }.into());
                        cols.push(fmt(*omega));
                        for f in fields_of(dec) {
                            push_field_csv(&mut cols, &f);
                        }
                    }
                    None => {
                        cols.push("0".into());
                        cols.push("0".into());
                        cols.push(fmt(0.0));
                        for _ in 0..parts.len() {
                            push_field_csv(&mut cols, &EMField::zero());
                        }
                    }
                }
                writeln!(out, "{}", cols.join(","))?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|row| match &row.dec {
                    Some((dec, omega)) => {
                        let mut obj = serde_json::Map::new();
                        obj.insert("x".into(), json!(row.x));
                        obj.insert("z".into(), json!(row.z));
                        obj.insert("status".into(), json!(row.status.as_str()));
                        obj.insert("incident_lit".into(), json!(dec.incident_lit));
                        obj.insert("reflected_lit".into(), json!(dec.reflected_lit));
                        obj.insert("local_omega".into(), json!(omega));
                        for (name, f) in parts.iter().zip(fields_of(dec)) {
                            obj.insert(name.to_string(), field_json(&f));
                        }
                        serde_json::Value::Object(obj)
                    }
                    None => json!({
                        "x": row.x,
                        "z": row.z,
                        "status": row.status.as_str(),
                    }),
                })
                .collect();
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "kind": "decompose",
                "scenario": scenario_json(w, m, t),
                "grid": grid,
                "rows": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

/// All geometric loci at one instant, as a JSON document.
///
/// `c_levels` selects which equiphase circles to include; levels whose
/// wavefront does not exist yet are reported with `"exists": false`.
pub fn run_geometry(
    out: &mut dyn Write,
    w: &WaveParams,
    m: &Motion,
    t: f64,
    c_levels: &[f64],
) -> Result<()> {
    let circles: Vec<_> = c_levels
        .iter()
        .map(|&cl| match equiphase_circle(cl, w, m, t) {
            Ok(c) => json!({"exists": true, "c_level": c.c_level, "center": c.center, "radius": c.radius}),
            Err(EdgewaveError::NoSuchWavefront { .. }) => {
                json!({"exists": false, "c_level": cl})
            }
            Err(_) => json!({"exists": false, "c_level": cl}),
        })
        .collect();
    let extremal = match extremal_z_lines(w, m, t) {
        Ok(l) => json!({
            "defined": true,
            "cos_phi_prime": l.cos_phi_prime,
            "upper": l.upper,
            "lower": l.lower,
        }),
        Err(EdgewaveError::UndefinedLocus) => json!({"defined": false}),
        Err(e) => return Err(e),
    };
    let [sing_i, sing_r] = singularity_lines(w, m, t);
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "geometry",
        "scenario": scenario_json(w, m, t),
        "edge": [m.edge_x(w.c, t), 0.0],
        "shadow_boundaries": {
            "incident": shadow_boundary(BoundaryKind::Incident, w, m, t),
            "reflected": shadow_boundary(BoundaryKind::Reflected, w, m, t),
        },
        "singularity_lines": [sing_i, sing_r],
        "extremal_z_lines": extremal,
        "equiphase_circles": circles,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

/// Maxwell + boundary residual check, optionally enforcing a tolerance.
///
/// Writes a JSON report; with `tolerance` set, a breach is returned as
/// [`EdgewaveError::ToleranceBreach`] after the report is written.
pub fn run_validate(
    out: &mut dyn Write,
    w: &WaveParams,
    m: &Motion,
    t: f64,
    region: &SampleRegion,
    stencil_h: Option<f64>,
    tolerance: Option<f64>,
) -> Result<()> {
    let maxwell = maxwell_residual(w, m, t, region, stencil_h)?;
    let boundary = boundary_residual(w, m, &[0.5, 1.0, 2.0, 5.0, 10.0, 50.0])?;
    let report = |r: &ResidualReport| {
        json!({
            "max_abs_residual": r.max_abs_residual,
            "relative_to": r.relative_to,
            "stencil_h": r.stencil_h,
        })
    };
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "validate",
        "scenario": scenario_json(w, m, t),
        "region": region,
        "maxwell": report(&maxwell),
        "boundary": report(&boundary),
        "tolerance": tolerance,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    if let Some(tol) = tolerance {
        require_within(&maxwell, "maxwell residual", tol)?;
        require_within(&boundary, "boundary residual", tol)?;
    }
    Ok(())
}

/// Convergence scan of the high-frequency decomposition, as CSV
/// (`k_rho,max_rel_error,slope` with the fitted slope repeated per row) or
/// JSON.
pub fn run_convergence(
    out: &mut dyn Write,
    w: &WaveParams,
    m: &Motion,
    t: f64,
    directions: &[f64],
    k_rho_values: &[f64],
    format: OutputFormat,
) -> Result<()> {
    let scan = convergence_scan(w, m, t, directions, k_rho_values)?;
    match format {
        OutputFormat::Csv => {
            writeln!(out, "k_rho,max_rel_error,slope")?;
            for row in &scan.rows {
                writeln!(
                    out,
                    "{},{},{}",
                    fmt(row.k_rho),
                    fmt(row.max_rel_error),
                    fmt(scan.slope)
                )?;
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "kind": "convergence",
                "scenario": scenario_json(w, m, t),
                "directions": directions,
                "rows": scan.rows,
                "slope": scan.slope,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}
