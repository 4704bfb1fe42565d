//! High-frequency decomposition of the laboratory field.
//!
//! Splits the exact field into geometrical-optics incident and reflected
//! plane waves (each existing only in its lit region) plus an edge-launched
//! diffracted wave. The lit/shadow bookkeeping comes from the signs of the
//! edge-integral arguments u' and v' at the boosted point: a wave is lit
//! where its argument is negative.
//!
//! The diffracted wave is assembled from closed-form ray factors; its
//! amplitude diverges on the shadow boundaries (the singularity lines of
//! [`crate::geometry`]), and the decomposition refuses to evaluate within a
//! small tolerance of them.

use num_complex::Complex64;

use crate::error::{EdgewaveError, Result};
use crate::kinematics::{lab_to_primed, sommerfeld_arguments, transform_wave, LabPoint, Motion, WaveParams};
use crate::sommerfeld::EMField;

/// |u'| or |v'| below this means "on a shadow boundary".
pub const SHADOW_BOUNDARY_TOL: f64 = 1e-6;

/// Normalization of the edge-launched cylindrical wave: e^{i 3 pi/4}/sqrt(pi).
/// Fixed by matching the diffracted term of the exact solution (the i/(2a)
/// tail of the edge integral) in the stationary limit.
const DIFFRACTION_NORM: Complex64 = Complex64::new(
    -std::f64::consts::FRAC_1_SQRT_2 / 1.772_453_850_905_516_f64,
    std::f64::consts::FRAC_1_SQRT_2 / 1.772_453_850_905_516_f64,
);

/// GO + diffracted split of the laboratory field at one point.
#[derive(Debug, Clone, Copy)]
pub struct FieldDecomposition {
    pub go_incident: EMField,
    pub go_reflected: EMField,
    pub diffracted: EMField,
    pub total: EMField,
    pub incident_lit: bool,
    pub reflected_lit: bool,
}

/// Ray factors of the diffracted wave.
///
/// `r` is the effective (velocity-contracted) distance from the edge and
/// `s` the unit-modulus phase factor carrying the Doppler-shifted phase.
#[derive(Debug, Clone, Copy)]
pub struct DiffractionFactors {
    pub f_plus: Complex64,
    pub f_minus: Complex64,
    pub g_plus: f64,
    pub g_minus: f64,
    pub h1: f64,
    pub h2_plus: f64,
    pub h2_minus: f64,
    pub h3: f64,
    pub r: f64,
    pub s: Complex64,
}

fn sign_or_one(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Geometrical-optics incident and reflected plane waves with their lit
/// flags. Errors out on (or numerically at) a shadow boundary, where the GO
/// field jumps.
pub fn go_field(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<(EMField, EMField, bool, bool)> {
    let pw = transform_wave(w, m);
    let pp = lab_to_primed(p, m, w.c);
    let (u, v) = sommerfeld_arguments(&pp, &pw);
    if u.abs() < SHADOW_BOUNDARY_TOL || v.abs() < SHADOW_BOUNDARY_TOL {
        return Err(EdgewaveError::ShadowBoundary { u, v });
    }
    let incident_lit = u < 0.0;
    let reflected_lit = v < 0.0;
    let (st, ct) = w.theta.sin_cos();
    let omega_t = w.omega() * p.t;

    let mut incident = EMField::zero();
    if incident_lit {
        let phase = -(w.k * (p.x * ct + p.z * st) + omega_t);
        let (s, c) = phase.sin_cos();
        let e = Complex64::new(c, s);
        incident.e[0] = -w.a2 * st * e;
        incident.e[1] = w.a1 * e;
        incident.e[2] = w.a2 * ct * e;
        incident.cb[0] = w.a1 * st * e;
        incident.cb[1] = w.a2 * e;
        incident.cb[2] = -w.a1 * ct * e;
    }
    let mut reflected = EMField::zero();
    if reflected_lit {
        let phase = -(w.k * (p.x * ct - p.z * st) + omega_t);
        let (s, c) = phase.sin_cos();
        let e = Complex64::new(c, s);
        reflected.e[0] = w.a2 * st * e;
        reflected.e[1] = -w.a1 * e;
        reflected.e[2] = w.a2 * ct * e;
        reflected.cb[0] = w.a1 * st * e;
        reflected.cb[1] = w.a2 * e;
        reflected.cb[2] = w.a1 * ct * e;
    }
    Ok((incident, reflected, incident_lit, reflected_lit))
}

/// Closed-form ray factors of the diffracted wave at a laboratory point.
pub fn diffraction_factors(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<DiffractionFactors> {
    let beta = m.beta();
    let gamma = m.gamma();
    let ct = w.theta.cos();
    let xb = p.x - beta * w.c * p.t;
    let r = (xb * xb + (p.z / gamma) * (p.z / gamma)).sqrt();
    if r == 0.0 {
        return Err(EdgewaveError::EdgeSingularity { rho: 0.0 });
    }
    let doppler = 1.0 + beta * ct;
    let den = doppler * xb + (ct + beta) * r;
    if den.abs() < SHADOW_BOUNDARY_TOL * r {
        return Err(EdgewaveError::SingularityLine);
    }
    // principal square root of (1 +/- beta)(1 +/- cos theta)/(2 i k)
    let two_ik = Complex64::new(0.0, 2.0 * w.k);
    let f_plus = (Complex64::new((1.0 + beta) * (1.0 + ct), 0.0) / two_ik).sqrt();
    let f_minus = (Complex64::new((1.0 - beta) * (1.0 - ct), 0.0) / two_ik).sqrt();
    let g_plus = (r + xb).max(0.0).sqrt() / r * doppler / den;
    let g_minus = (r - xb).max(0.0).sqrt() / r * doppler / den;
    let phase = w.k * gamma * gamma * doppler * (r + beta * p.x - w.c * p.t) - std::f64::consts::FRAC_PI_4;
    let (sp, cp) = phase.sin_cos();
    Ok(DiffractionFactors {
        f_plus,
        f_minus,
        g_plus,
        g_minus,
        h1: r + beta * xb,
        h2_plus: r + xb,
        h2_minus: r - xb,
        h3: beta * r + xb,
        r,
        s: Complex64::new(cp, sp),
    })
}

/// Edge-diffracted wave in laboratory components.
pub fn diffracted_field(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<EMField> {
    let fac = diffraction_factors(p, w, m)?;
    let gamma = m.gamma();
    let sgn_z = sign_or_one(p.z);
    let sgn_t = sign_or_one(w.theta);
    let s = DIFFRACTION_NORM * fac.s;
    let ud_e1 = -gamma * fac.f_plus * fac.g_plus * fac.h1 * s;
    let ud_e2 = sgn_z * fac.f_plus * fac.g_minus * fac.h2_plus * s;
    let ud_e3 = -gamma * fac.f_plus * fac.g_plus * fac.h3 * s;
    let ud_h1 = sgn_t * sgn_z * gamma * fac.f_minus * fac.g_minus * fac.h1 * s;
    let ud_h2 = sgn_t * fac.f_minus * fac.g_plus * fac.h2_minus * s;
    let ud_h3 = -sgn_t * sgn_z * gamma * fac.f_minus * fac.g_minus * fac.h3 * s;
    let mut f = EMField::zero();
    f.e[0] = w.a2 * ud_h2;
    f.e[1] = w.a1 * ud_e1;
    f.e[2] = w.a2 * ud_h3;
    f.cb[0] = w.a1 * ud_e2;
    f.cb[1] = w.a2 * ud_h1;
    f.cb[2] = w.a1 * ud_e3;
    Ok(f)
}

/// Full GO + diffracted decomposition.
pub fn decompose(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<FieldDecomposition> {
    let (go_incident, go_reflected, incident_lit, reflected_lit) = go_field(p, w, m)?;
    let diffracted = diffracted_field(p, w, m)?;
    let total = go_incident.add(&go_reflected).add(&diffracted);
    Ok(FieldDecomposition {
        go_incident,
        go_reflected,
        diffracted,
        total,
        incident_lit,
        reflected_lit,
    })
}

/// Instantaneous frequency -dPhi/dt of the diffracted wave:
/// omega_local = k c gamma^2 (1 + beta cos theta)(1 + beta (x - beta c t)/r).
pub fn local_frequency(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<f64> {
    let beta = m.beta();
    let gamma = m.gamma();
    let xb = p.x - beta * w.c * p.t;
    let r = (xb * xb + (p.z / gamma) * (p.z / gamma)).sqrt();
    if r == 0.0 {
        return Err(EdgewaveError::EdgeSingularity { rho: 0.0 });
    }
    Ok(w.k * w.c * gamma * gamma * (1.0 + beta * w.theta.cos()) * (1.0 + beta * xb / r))
}
