//! Exact half-plane field in the screen frame.
//!
//! The classical two-dimensional solution for a perfectly conducting
//! half-plane (x' <= 0, z' = 0), driven by the aberrated incident wave.
//! Both polarizations are expressed through the edge integral G of
//! [`crate::special`], with the time convention e^{-i omega t} throughout.
//!
//! The magnetic components carry a physical 1/sqrt(rho') edge singularity;
//! evaluation inside a small exclusion radius is reported as an error
//! rather than returning huge numbers silently.

use num_complex::Complex64;

use crate::error::{EdgewaveError, Result};
use crate::kinematics::{sommerfeld_arguments, PrimedPoint, PrimedWaveParams};
use crate::special::{eval_g_unchecked, SQRT_PI};

/// Edge exclusion radius in wavelengths.
pub const RHO_MIN_WAVELENGTHS: f64 = 1e-12;

/// Six complex Cartesian field components, E and c*B in the same units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EMField {
    /// (Ex, Ey, Ez)
    pub e: [Complex64; 3],
    /// (cBx, cBy, cBz)
    pub cb: [Complex64; 3],
}

impl EMField {
    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        EMField {
            e: [z; 3],
            cb: [z; 3],
        }
    }

    pub fn add(&self, other: &EMField) -> EMField {
        let mut out = *self;
        for i in 0..3 {
            out.e[i] += other.e[i];
            out.cb[i] += other.cb[i];
        }
        out
    }

    pub fn sub(&self, other: &EMField) -> EMField {
        let mut out = *self;
        for i in 0..3 {
            out.e[i] -= other.e[i];
            out.cb[i] -= other.cb[i];
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> EMField {
        let mut out = *self;
        for i in 0..3 {
            out.e[i] *= s;
            out.cb[i] *= s;
        }
        out
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .chain(self.cb.iter())
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// |E| = sqrt(sum |E_i|^2).
    pub fn e_magnitude(&self) -> f64 {
        self.e.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

fn check_edge(p: &PrimedPoint, pw: &PrimedWaveParams) -> Result<()> {
    let wavelength = 2.0 * std::f64::consts::PI / pw.k_prime;
    if p.rho_prime < RHO_MIN_WAVELENGTHS * wavelength {
        return Err(EdgewaveError::EdgeSingularity { rho: p.rho_prime });
    }
    Ok(())
}

struct Common {
    /// amplitude-free prefactor e^{-i pi/4}/sqrt(pi) e^{i k' rho'} e^{-i k' c t'}
    prefactor: Complex64,
    g_diff: Complex64,
    g_sum: Complex64,
    /// sqrt(2 / (k' rho'))
    rt: Complex64,
    sin_half_phi: f64,
    cos_half_phi: f64,
    sin_tp: f64,
    cos_tp: f64,
    sin_half_tp: f64,
    cos_half_tp: f64,
}

fn common(p: &PrimedPoint, pw: &PrimedWaveParams) -> Common {
    let (u, v) = sommerfeld_arguments(p, pw);
    let gu = eval_g_unchecked(u);
    let gv = eval_g_unchecked(v);
    let phase = pw.k_prime * (p.rho_prime - pw.c * p.t_prime);
    let (sp, cp) = phase.sin_cos();
    let emip4 = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2);
    let prefactor = emip4 / SQRT_PI * Complex64::new(cp, sp);
    let (shp, chp) = (0.5 * p.phi_prime).sin_cos();
    let (st, ct) = pw.theta_prime.sin_cos();
    let (sht, cht) = (0.5 * pw.theta_prime).sin_cos();
    Common {
        prefactor,
        g_diff: gu - gv,
        g_sum: gu + gv,
        rt: Complex64::new((2.0 / (pw.k_prime * p.rho_prime)).sqrt(), 0.0),
        sin_half_phi: shp,
        cos_half_phi: chp,
        sin_tp: st,
        cos_tp: ct,
        sin_half_tp: sht,
        cos_half_tp: cht,
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// E-polarization part: electric field parallel to the edge.
///
/// E'_y is the edge-integral bracket alone; the magnetic components follow
/// from the curl and pick up the 1/sqrt(k' rho') near-edge terms.
pub fn efield_primed(p: &PrimedPoint, pw: &PrimedWaveParams) -> Result<EMField> {
    check_edge(p, pw)?;
    let c = common(p, pw);
    let a = pw.a1_prime * c.prefactor;
    let mut f = EMField::zero();
    f.e[1] = a * c.g_diff;
    f.cb[0] = a * (c.sin_tp * c.g_sum + I * c.rt * c.sin_half_phi * c.cos_half_tp);
    f.cb[2] = a * (-c.cos_tp * c.g_diff - I * c.rt * c.cos_half_phi * c.cos_half_tp);
    Ok(f)
}

/// H-polarization part: magnetic field parallel to the edge.
pub fn hfield_primed(p: &PrimedPoint, pw: &PrimedWaveParams) -> Result<EMField> {
    check_edge(p, pw)?;
    let c = common(p, pw);
    let a = pw.a2_prime * c.prefactor;
    let mut f = EMField::zero();
    f.cb[1] = a * c.g_sum;
    f.e[0] = a * (-c.sin_tp * c.g_diff - I * c.rt * c.cos_half_phi * c.sin_half_tp);
    f.e[2] = a * (c.cos_tp * c.g_sum - I * c.rt * c.sin_half_phi * c.sin_half_tp);
    Ok(f)
}

/// Superposition of both polarizations.
pub fn total_field_primed(p: &PrimedPoint, pw: &PrimedWaveParams) -> Result<EMField> {
    Ok(efield_primed(p, pw)?.add(&hfield_primed(p, pw)?))
}
