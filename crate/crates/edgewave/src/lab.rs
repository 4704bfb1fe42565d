//! Exact total field in the laboratory frame.
//!
//! Closed-form expressions obtained by Lorentz-boosting the screen-frame
//! solution back to the laboratory: every quantity inside (k', theta',
//! rho', phi', t') is the transformed one, but the six components below are
//! laboratory components. The result is not time-harmonic; the genuine
//! (x, z, t) dependence is kept as-is.
//!
//! The numeric field boost of [`crate::sommerfeld`] is deliberately *not*
//! used here: these formulas are an independent algebraic route, and the
//! test suite holds the two routes against each other.

use num_complex::Complex64;

use crate::error::Result;
use crate::kinematics::{lab_to_primed, sommerfeld_arguments, transform_wave, LabPoint, Motion, WaveParams};
use crate::sommerfeld::EMField;
use crate::special::{eval_g_unchecked, SQRT_PI};
use crate::kinematics::{PrimedPoint, PrimedWaveParams};
use crate::error::EdgewaveError;
use crate::sommerfeld::RHO_MIN_WAVELENGTHS;

const I: Complex64 = Complex64::new(0.0, 1.0);

struct LabCommon {
    prefactor: Complex64, // e^{-i pi/4}/sqrt(pi) e^{i k' rho'} e^{-i k' c t'}
    g_diff: Complex64,
    g_sum: Complex64,
    rt: f64,
    cc: f64, // cos(phi'/2) cos(theta'/2)
    sc: f64, // sin(phi'/2) cos(theta'/2)
    cs: f64, // cos(phi'/2) sin(theta'/2)
    ss: f64, // sin(phi'/2) sin(theta'/2)
    sin_tp: f64,
    cos_tp: f64,
}

fn lab_common(p: &PrimedPoint, pw: &PrimedWaveParams) -> Result<LabCommon> {
    let wavelength = 2.0 * std::f64::consts::PI / pw.k_prime;
    if p.rho_prime < RHO_MIN_WAVELENGTHS * wavelength {
        return Err(EdgewaveError::EdgeSingularity { rho: p.rho_prime });
    }
    let (u, v) = sommerfeld_arguments(p, pw);
    let gu = eval_g_unchecked(u);
    let gv = eval_g_unchecked(v);
    let phase = pw.k_prime * (p.rho_prime - pw.c * p.t_prime);
    let (sp, cp) = phase.sin_cos();
    let emip4 = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2);
    let (shp, chp) = (0.5 * p.phi_prime).sin_cos();
    let (sht, cht) = (0.5 * pw.theta_prime).sin_cos();
    let (st, ct) = pw.theta_prime.sin_cos();
    Ok(LabCommon {
        prefactor: emip4 / SQRT_PI * Complex64::new(cp, sp),
        g_diff: gu - gv,
        g_sum: gu + gv,
        rt: (2.0 / (pw.k_prime * p.rho_prime)).sqrt(),
        cc: chp * cht,
        sc: shp * cht,
        cs: chp * sht,
        ss: shp * sht,
        sin_tp: st,
        cos_tp: ct,
    })
}

/// E-polarization contribution to the laboratory field.
pub fn lab_field_e(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<EMField> {
    let pw = transform_wave(w, m);
    let pp = lab_to_primed(p, m, w.c);
    let c = lab_common(&pp, &pw)?;
    let beta = m.beta();
    let gamma = m.gamma();
    let a = pw.a1_prime * c.prefactor;
    let mut f = EMField::zero();
    f.e[1] = a * gamma * ((1.0 - beta * c.cos_tp) * c.g_diff - I * beta * c.rt * c.cc);
    f.cb[0] = a * (c.sin_tp * c.g_sum + I * c.rt * c.sc);
    f.cb[2] = a * gamma * ((beta - c.cos_tp) * c.g_diff - I * c.rt * c.cc);
    Ok(f)
}

/// H-polarization contribution to the laboratory field.
pub fn lab_field_h(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<EMField> {
    let pw = transform_wave(w, m);
    let pp = lab_to_primed(p, m, w.c);
    let c = lab_common(&pp, &pw)?;
    let beta = m.beta();
    let gamma = m.gamma();
    let a = pw.a2_prime * c.prefactor;
    let mut f = EMField::zero();
    f.cb[1] = a * gamma * ((1.0 - beta * c.cos_tp) * c.g_sum + I * beta * c.rt * c.ss);
    f.e[0] = a * (-c.sin_tp * c.g_diff - I * c.rt * c.cs);
    f.e[2] = a * gamma * ((c.cos_tp - beta) * c.g_sum - I * c.rt * c.ss);
    Ok(f)
}

/// Total laboratory field: sum of both polarization parts.
pub fn lab_field_total(p: &LabPoint, w: &WaveParams, m: &Motion) -> Result<EMField> {
    Ok(lab_field_e(p, w, m)?.add(&lab_field_h(p, w, m)?))
}
