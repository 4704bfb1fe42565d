//! Self-checks: Maxwell residuals, boundary conditions, and convergence of
//! the high-frequency decomposition.
//!
//! These are numerical audits of the closed-form field routines. The curl
//! equations are checked with central finite differences in all of x, z and
//! t (the laboratory field is not time-harmonic, so the time derivative is
//! differenced like the spatial ones); the perfect-conductor condition is
//! checked on both faces of the screen; and the decomposition error is
//! scanned over distance from the edge to expose its power-law decay.

use serde::Serialize;

use crate::asymptotics::decompose;
use crate::error::{EdgewaveError, Result};
use crate::kinematics::{transform_wave, LabPoint, Motion, PrimedPoint, WaveParams};
use crate::lab::lab_field_total;
use crate::sommerfeld::total_field_primed;

/// Rectangular sampling region for the Maxwell check, at one instant.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleRegion {
    pub x_min: f64,
    pub x_max: f64,
    pub z_min: f64,
    pub z_max: f64,
    pub nx: usize,
    pub nz: usize,
}

/// Outcome of a residual check.
///
/// `max_abs_residual` is already normalized by `relative_to` (the local
/// field scale times k for the curl equations, the incident amplitude for
/// the boundary check). `convergence_slope` is filled only by
/// [`convergence_scan`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ResidualReport {
    pub max_abs_residual: f64,
    pub relative_to: f64,
    pub stencil_h: f64,
    pub convergence_slope: Option<f64>,
}

/// One row of a convergence scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvergenceRow {
    pub k_rho: f64,
    pub max_rel_error: f64,
}

/// Full convergence scan: per-distance errors plus the fitted log-log slope.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceScan {
    pub rows: Vec<ConvergenceRow>,
    pub slope: f64,
}

/// Default finite-difference step, in wavelengths.
pub const DEFAULT_STENCIL_H: f64 = 1e-3;

/// Minimum angular separation (radians) a scan direction must keep from the
/// shadow boundaries.
pub const MIN_BOUNDARY_SEPARATION: f64 = 10.0 * std::f64::consts::PI / 180.0;

fn wrap_angle(a: f64) -> f64 {
    let mut a = a.rem_euclid(2.0 * std::f64::consts::PI);
    if a > std::f64::consts::PI {
        a -= 2.0 * std::f64::consts::PI;
    }
    a
}

fn angular_distance(a: f64, b: f64) -> f64 {
    wrap_angle(a - b).abs()
}

/// Maximum residual of both curl equations over a sampling region.
///
/// The field crosses the screen discontinuously, so the region (inflated by
/// the stencil) must stay clear of it; otherwise the difference quotients
/// are meaningless and the call fails with
/// [`EdgewaveError::RegionIntersectsScreen`].
/// `h_wavelengths` is the stencil step as a fraction of the wavelength
/// (defaulted to [`DEFAULT_STENCIL_H`] when `None`).
pub fn maxwell_residual(
    w: &WaveParams,
    m: &Motion,
    t: f64,
    region: &SampleRegion,
    h_wavelengths: Option<f64>,
) -> Result<ResidualReport> {
    if region.nx < 1 || region.nz < 1 || region.x_max < region.x_min || region.z_max < region.z_min {
        return Err(EdgewaveError::InvalidParameter {
            name: "region",
            reason: "empty sampling region".into(),
        });
    }
    let hw = h_wavelengths.unwrap_or(DEFAULT_STENCIL_H);
    if !(hw.is_finite() && hw > 0.0) {
        return Err(EdgewaveError::InvalidParameter {
            name: "stencil_h",
            reason: format!("stencil step must be positive, got {hw}"),
        });
    }
    let lambda = 2.0 * std::f64::consts::PI / w.k;
    let h = hw * lambda;
    // the screen is z = 0, x <= v t; keep a 2h margin around it for every
    // stencil point (the time legs move the edge by beta c h/c = beta h)
    let crosses_z = region.z_min - 2.0 * h <= 0.0 && region.z_max + 2.0 * h >= 0.0;
    if crosses_z && region.x_min - 2.0 * h <= m.edge_x(w.c, t) + m.beta().abs() * h {
        return Err(EdgewaveError::RegionIntersectsScreen);
    }

    let ht = h / w.c;
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for iz in 0..region.nz {
        let fz = if region.nz == 1 { 0.5 } else { iz as f64 / (region.nz - 1) as f64 };
        let z = region.z_min + fz * (region.z_max - region.z_min);
        for ix in 0..region.nx {
            let fx = if region.nx == 1 { 0.5 } else { ix as f64 / (region.nx - 1) as f64 };
            let x = region.x_min + fx * (region.x_max - region.x_min);
            let fpx = lab_field_total(&LabPoint::new(x + h, z, t), w, m)?;
            let fmx = lab_field_total(&LabPoint::new(x - h, z, t), w, m)?;
            let fpz = lab_field_total(&LabPoint::new(x, z + h, t), w, m)?;
            let fmz = lab_field_total(&LabPoint::new(x, z - h, t), w, m)?;
            let fpt = lab_field_total(&LabPoint::new(x, z, t + ht), w, m)?;
            let fmt = lab_field_total(&LabPoint::new(x, z, t - ht), w, m)?;

            let dx = fpx.sub(&fmx).scale((0.5 / h).into());
            let dz = fpz.sub(&fmz).scale((0.5 / h).into());
            let dt = fpt.sub(&fmt).scale((0.5 / (ht * w.c)).into());

            // curl E + (1/c) d(cB)/dt = 0 ; curl cB - (1/c) dE/dt = 0
            let r1 = [
                -dz.e[1] + dt.cb[0],
                dz.e[0] - dx.e[2] + dt.cb[1],
                dx.e[1] + dt.cb[2],
            ];
            let r2 = [
                -dz.cb[1] - dt.e[0],
                dz.cb[0] - dx.cb[2] - dt.e[1],
                dx.cb[1] - dt.e[2],
            ];
            for r in r1.iter().chain(r2.iter()) {
                worst = worst.max(r.norm());
            }
            for f in [&fpx, &fmx, &fpz, &fmz, &fpt, &fmt] {
                scale = scale.max(f.max_abs());
            }
        }
    }
    if scale == 0.0 {
        return Ok(ResidualReport {
            max_abs_residual: 0.0,
            relative_to: 0.0,
            stencil_h: h,
            convergence_slope: None,
        });
    }
    Ok(ResidualReport {
        max_abs_residual: worst / (w.k * scale),
        relative_to: w.k * scale,
        stencil_h: h,
        convergence_slope: None,
    })
}

/// Perfect-conductor check on both faces of the screen.
///
/// Samples the screen-frame total field at the given distances from the edge
/// (in screen-frame units) on the upper (phi' = pi) and lower (phi' = -pi)
/// faces and reports the largest tangential E and normal cB component,
/// relative to the transformed incident amplitude.
pub fn boundary_residual(w: &WaveParams, m: &Motion, rho_primes: &[f64]) -> Result<ResidualReport> {
    if rho_primes.is_empty() {
        return Err(EdgewaveError::InvalidParameter {
            name: "rho_primes",
            reason: "need at least one sampling distance".into(),
        });
    }
    let pw = transform_wave(w, m);
    let amp = pw.a1_prime.norm() + pw.a2_prime.norm();
    if amp == 0.0 {
        return Err(EdgewaveError::InvalidParameter {
            name: "amplitudes",
            reason: "boundary residual is undefined for a zero incident wave".into(),
        });
    }
    let mut worst: f64 = 0.0;
    for &rho in rho_primes {
        for &face in &[std::f64::consts::PI, -std::f64::consts::PI] {
            let p = PrimedPoint::from_polar(rho, face, 0.0);
            let f = total_field_primed(&p, &pw)?;
            worst = worst
                .max(f.e[0].norm())
                .max(f.e[1].norm())
                .max(f.cb[2].norm());
        }
    }
    Ok(ResidualReport {
        max_abs_residual: worst / amp,
        relative_to: amp,
        stencil_h: 0.0,
        convergence_slope: None,
    })
}

/// Least-squares slope of log(y) against log(x).
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(EdgewaveError::InvalidParameter {
            name: "samples",
            reason: "need at least two matching samples".into(),
        });
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in lx.iter().zip(&ly) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        return Err(EdgewaveError::InvalidParameter {
            name: "samples",
            reason: "all abscissae coincide".into(),
        });
    }
    Ok(num / den)
}

/// Error of the high-frequency decomposition against the exact field, as a
/// function of scaled distance k*rho from the edge.
///
/// `directions` are laboratory polar angles around the instantaneous edge
/// position; each must keep [`MIN_BOUNDARY_SEPARATION`] away from both
/// shadow boundaries, where the ray expansion diverges. For each k*rho in
/// `k_rho_values` the error is maximized over the direction fan; the
/// reported slope is the log-log fit of error against k*rho.
pub fn convergence_scan(
    w: &WaveParams,
    m: &Motion,
    t: f64,
    directions: &[f64],
    k_rho_values: &[f64],
) -> Result<ConvergenceScan> {
    if directions.is_empty() {
        return Err(EdgewaveError::Usage("no scan directions given".into()));
    }
    if k_rho_values.len() < 2 {
        return Err(EdgewaveError::InvalidParameter {
            name: "k_rho_values",
            reason: "need at least two distances to fit a slope".into(),
        });
    }
    let beta = m.beta();
    let (st, ct) = w.theta.sin_cos();
    let boundary_angles = [
        (-st).atan2(-(ct + beta)),
        st.atan2(-(ct + beta)),
    ];
    for &phi in directions {
        let sep = boundary_angles
            .iter()
            .map(|&b| angular_distance(phi, b))
            .fold(f64::INFINITY, f64::min);
        if sep < MIN_BOUNDARY_SEPARATION {
            return Err(EdgewaveError::DirectionNearBoundary {
                angle: phi,
                min_sep: MIN_BOUNDARY_SEPARATION,
            });
        }
    }
    let ex = m.edge_x(w.c, t);
    let mut rows = Vec::with_capacity(k_rho_values.len());
    for &krho in k_rho_values {
        if !(krho.is_finite() && krho > 0.0) {
            return Err(EdgewaveError::InvalidParameter {
                name: "k_rho_values",
                reason: format!("scaled distances must be positive, got {krho}"),
            });
        }
        let rho = krho / w.k;
        let mut err: f64 = 0.0;
        for &phi in directions {
            let (s, c) = phi.sin_cos();
            let p = LabPoint::new(ex + rho * c, rho * s, t);
            let exact = lab_field_total(&p, w, m)?;
            let approx = decompose(&p, w, m)?.total;
            let denom = exact.max_abs();
            if denom > 0.0 {
                err = err.max(approx.sub(&exact).max_abs() / denom);
            }
        }
        rows.push(ConvergenceRow {
            k_rho: krho,
            max_rel_error: err,
        });
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.k_rho).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.max_rel_error.max(1e-300)).collect();
    let slope = loglog_slope(&xs, &ys)?;
    Ok(ConvergenceScan { rows, slope })
}

/// Convenience check used by the command-line tool: fails with
/// [`EdgewaveError::ToleranceBreach`] if a residual exceeds `tol`.
pub fn require_within(report: &ResidualReport, what: &str, tol: f64) -> Result<()> {
    if report.max_abs_residual > tol {
        return Err(EdgewaveError::ToleranceBreach {
            what: what.to_string(),
            value: report.max_abs_residual,
            tolerance: tol,
        });
    }
    Ok(())
}
