//! Incident-wave parameters, screen motion, and Lorentz transformations.
//!
//! The screen co-moving ("primed") frame travels along +x at speed
//! `beta * c` relative to the laboratory. Everything here is the standard
//! special-relativistic bookkeeping: aberration and Doppler shift of the
//! incident plane wave, and the coordinate boost between the two frames.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{EdgewaveError, Result};

/// Incident plane wave in the laboratory frame.
///
/// `theta` is measured from the +x axis to the direction the wave comes
/// from, so the propagation direction is (-cos theta, -sin theta).
/// `a1` is the E-wave (electric field parallel to the edge) amplitude and
/// `a2` the H-wave amplitude, in units of c*B. A nontrivial problem needs
/// at least one of them nonzero, but zero amplitudes are accepted: they
/// simply produce a zero field.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct WaveParams {
    pub k: f64,
    pub theta: f64,
    pub a1: Complex64,
    pub a2: Complex64,
    pub c: f64,
}

impl WaveParams {
    pub fn new(k: f64, theta: f64, a1: Complex64, a2: Complex64, c: f64) -> Result<Self> {
        if !(k.is_finite() && theta.is_finite() && c.is_finite())
            || !a1.re.is_finite()
            || !a1.im.is_finite()
            || !a2.re.is_finite()
            || !a2.im.is_finite()
        {
            return Err(EdgewaveError::NonFiniteInput("wave parameters"));
        }
        if k <= 0.0 {
            return Err(EdgewaveError::InvalidParameter {
                name: "k",
                reason: format!("wavenumber must be positive, got {k}"),
            });
        }
        if c <= 0.0 {
            return Err(EdgewaveError::InvalidParameter {
                name: "c",
                reason: format!("wave speed must be positive, got {c}"),
            });
        }
        if theta <= -std::f64::consts::PI || theta >= std::f64::consts::PI {
            return Err(EdgewaveError::InvalidParameter {
                name: "theta",
                reason: format!("incidence angle must lie in (-pi, pi), got {theta}"),
            });
        }
        Ok(WaveParams { k, theta, a1, a2, c })
    }

    /// Angular frequency omega = k c.
    pub fn omega(&self) -> f64 {
        self.k * self.c
    }
}

/// Screen velocity parameter; gamma is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Motion {
    beta: f64,
}

impl Motion {
    pub fn new(beta: f64) -> Result<Self> {
        if !beta.is_finite() {
            return Err(EdgewaveError::NonFiniteInput("beta"));
        }
        if beta.abs() >= 1.0 {
            return Err(EdgewaveError::InvalidParameter {
                name: "beta",
                reason: format!("|beta| must be < 1, got {beta}"),
            });
        }
        Ok(Motion { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta * self.beta).sqrt()
    }

    /// Screen speed v = beta c.
    pub fn speed(&self, c: f64) -> f64 {
        self.beta * c
    }

    /// Edge position at laboratory time t (the edge is at x = v t, z = 0).
    pub fn edge_x(&self, c: f64, t: f64) -> f64 {
        self.beta * c * t
    }
}

/// Incident wave as seen in the screen frame.
#[derive(Debug, Clone, Copy)]
pub struct PrimedWaveParams {
    pub k_prime: f64,
    pub theta_prime: f64,
    pub a1_prime: Complex64,
    pub a2_prime: Complex64,
    /// Wave speed, identical in both frames.
    pub c: f64,
}

/// Laboratory-frame spacetime point (the problem is y-independent).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabPoint {
    pub x: f64,
    pub z: f64,
    pub t: f64,
}

impl LabPoint {
    pub fn new(x: f64, z: f64, t: f64) -> Self {
        LabPoint { x, z, t }
    }
}

/// Screen-frame spacetime point with cached cylindrical coordinates.
///
/// `phi_prime` lies in (-pi, pi]; the upper screen face is phi' = +pi.
/// Constructing from polar coordinates permits phi' = -pi to address the
/// lower face explicitly (the field is discontinuous across the screen).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimedPoint {
    pub x_prime: f64,
    pub z_prime: f64,
    pub t_prime: f64,
    pub rho_prime: f64,
    pub phi_prime: f64,
}

impl PrimedPoint {
    pub fn from_cartesian(x_prime: f64, z_prime: f64, t_prime: f64) -> Self {
        let rho_prime = x_prime.hypot(z_prime);
        let mut phi_prime = z_prime.atan2(x_prime);
        // branch (-pi, pi]: the screen approached through z > 0 is phi' = pi
        if phi_prime == -std::f64::consts::PI {
            phi_prime = std::f64::consts::PI;
        }
        PrimedPoint {
            x_prime,
            z_prime,
            t_prime,
            rho_prime,
            phi_prime,
        }
    }

    pub fn from_polar(rho_prime: f64, phi_prime: f64, t_prime: f64) -> Self {
        PrimedPoint {
            x_prime: rho_prime * phi_prime.cos(),
            z_prime: rho_prime * phi_prime.sin(),
            t_prime,
            rho_prime,
            phi_prime,
        }
    }
}

/// Aberration and Doppler shift of the incident wave into the screen frame.
///
/// The common factor gamma (1 + beta cos theta) multiplies amplitudes and
/// the wavenumber; theta' is recovered with atan2 so the sign of sin theta'
/// survives.
pub fn transform_wave(w: &WaveParams, m: &Motion) -> PrimedWaveParams {
    let beta = m.beta();
    let gamma = m.gamma();
    let doppler = 1.0 + beta * w.theta.cos();
    let cos_tp = (w.theta.cos() + beta) / doppler;
    let sin_tp = w.theta.sin() / (gamma * doppler);
    PrimedWaveParams {
        k_prime: w.k * gamma * doppler,
        theta_prime: sin_tp.atan2(cos_tp),
        a1_prime: w.a1 * gamma * doppler,
        a2_prime: w.a2 * gamma * doppler,
        c: w.c,
    }
}

/// Boost a laboratory event into the screen frame.
pub fn lab_to_primed(p: &LabPoint, m: &Motion, c: f64) -> PrimedPoint {
    let beta = m.beta();
    let gamma = m.gamma();
    PrimedPoint::from_cartesian(
        gamma * (p.x - beta * c * p.t),
        p.z,
        gamma * (p.t - beta * p.x / c),
    )
}

/// Inverse boost; `primed_to_lab(lab_to_primed(p))` is the identity.
pub fn primed_to_lab(p: &PrimedPoint, m: &Motion, c: f64) -> LabPoint {
    let beta = m.beta();
    let gamma = m.gamma();
    LabPoint {
        x: gamma * (p.x_prime + beta * c * p.t_prime),
        z: p.z_prime,
        t: gamma * (p.t_prime + beta * p.x_prime / c),
    }
}

/// Arguments (u', v') of the edge integral at a screen-frame point:
/// u' = -sqrt(2 k' rho') cos((phi' - theta')/2),
/// v' = +sqrt(2 k' rho') cos((phi' + theta')/2).
///
/// u' = 0 and v' = 0 are the incident and reflected shadow boundaries.
pub fn sommerfeld_arguments(p: &PrimedPoint, pw: &PrimedWaveParams) -> (f64, f64) {
    let m = (2.0 * pw.k_prime * p.rho_prime).sqrt();
    let u = -m * (0.5 * (p.phi_prime - pw.theta_prime)).cos();
    let v = m * (0.5 * (p.phi_prime + pw.theta_prime)).cos();
    (u, v)
}
