//! Independent oracles shared by the integration tests.
//!
//! Nothing here reuses the crate's evaluation paths: the edge integral is
//! recomputed by adaptive quadrature on a rotated contour, and the
//! laboratory field by an explicit numeric Lorentz boost of the screen-frame
//! solution.

use num_complex::Complex64;

use edgewave::kinematics::{lab_to_primed, transform_wave, LabPoint, Motion, WaveParams};
use edgewave::sommerfeld::{total_field_primed, EMField};

const SQRT_PI: f64 = 1.772_453_850_905_516;

fn eip4() -> Complex64 {
    Complex64::new(std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2)
}

/// Adaptive Simpson quadrature for a complex integrand.
fn simpson<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: u32,
) -> Complex64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.norm() < 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(&f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Oracle for the edge integral G(a) = e^{-i a^2} Int_a^inf e^{i tau^2} dtau.
///
/// The contour tau = a + xi e^{i pi/4} turns the oscillatory tail into a
/// Gaussian: for a >= 0 the integrand is e^{-xi^2 - sqrt(2) a xi} times a
/// unit phasor after the e^{-i a^2} prefactor is absorbed. Negative a would
/// make that factor blow up, so it is folded back with the reflection
/// identity first.
pub fn g_oracle(a: f64) -> Complex64 {
    if a < 0.0 {
        let (s, c) = (a * a).sin_cos();
        return SQRT_PI * eip4() * Complex64::new(c, -s) - g_oracle(-a);
    }
    let f = |xi: f64| {
        let damp = (-xi * xi - std::f64::consts::SQRT_2 * a * xi).exp();
        let phase = std::f64::consts::SQRT_2 * a * xi;
        let (s, c) = phase.sin_cos();
        damp * Complex64::new(c, s)
    };
    eip4() * integrate(f, 0.0, 9.0, 1e-14)
}

/// Oracle for the laboratory field: evaluate the screen-frame solution at
/// the boosted event and transform the components by the standard field
/// boost along x.
pub fn boosted_lab_field(p: &LabPoint, w: &WaveParams, m: &Motion) -> EMField {
    let pw = transform_wave(w, m);
    let pp = lab_to_primed(p, m, w.c);
    let fp = total_field_primed(&pp, &pw).expect("oracle point away from the edge");
    let beta = m.beta();
    let g = m.gamma();
    let mut f = EMField::zero();
    f.e[0] = fp.e[0];
    f.cb[0] = fp.cb[0];
    f.e[1] = g * (fp.e[1] + beta * fp.cb[2]);
    f.e[2] = g * (fp.e[2] - beta * fp.cb[1]);
    f.cb[1] = g * (fp.cb[1] - beta * fp.e[2]);
    f.cb[2] = g * (fp.cb[2] + beta * fp.e[1]);
    f
}
