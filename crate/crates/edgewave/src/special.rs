//! The Fresnel-type edge integral
//!
//! The whole half-plane solution is built from one special function,
//!
//! ```text
//! G(a) = e^{-i a^2} * Integral_a^inf e^{i tau^2} d tau .
//! ```
//!
//! For a >= 0 this is evaluated through the Faddeeva function on the
//! anti-diagonal ray, G(a) = (sqrt(pi)/2) e^{i pi/4} w(a e^{i pi/4}),
//! where |w| <= 1 and the evaluation is stable. Negative arguments use the
//! reflection formula G(a) + G(-a) = sqrt(pi) e^{i pi/4} e^{-i a^2}.

use errorfunctions::w_with_relerror;
use num_complex::Complex64;

use crate::error::{EdgewaveError, Result};

/// sqrt(pi)
pub const SQRT_PI: f64 = 1.772_453_850_905_516_f64;

/// e^{i pi/4}
pub(crate) const EIP4: Complex64 = Complex64::new(
    std::f64::consts::FRAC_1_SQRT_2,
    std::f64::consts::FRAC_1_SQRT_2,
);

/// Validated real argument of [`eval_g`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GArgument(f64);

impl GArgument {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(EdgewaveError::NonFiniteInput("G argument"));
        }
        Ok(GArgument(a))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// e^{-i a^2} as a unit phasor.
#[inline]
fn phase_neg_a2(a: f64) -> Complex64 {
    let (s, c) = (a * a).sin_cos();
    Complex64::new(c, -s)
}

/// G(a) for finite real a.
///
/// Absolute accuracy is a few 1e-13 for |a| <= 50 (limited by the Faddeeva
/// evaluation) and degrades gracefully to ~1e-10 for larger |a| where the
/// phase e^{-i a^2} loses digits to argument reduction.
pub fn eval_g(a: f64) -> Result<Complex64> {
    let a = GArgument::new(a)?.value();
    Ok(eval_g_unchecked(a))
}

pub(crate) fn eval_g_unchecked(a: f64) -> Complex64 {
    if a >= 0.0 {
        0.5 * SQRT_PI * EIP4 * w_with_relerror(a * EIP4, 0.0)
    } else {
        // reflection onto the stable half-line
        SQRT_PI * EIP4 * phase_neg_a2(a) - eval_g_unchecked(-a)
    }
}

/// Two-term large-argument form of G:
/// H(-a) sqrt(pi) e^{i pi/4} e^{-i a^2} + i/(2a).
///
/// The step term is the geometrical-optics contribution; the 1/a term is the
/// leading diffracted contribution. Diverges on the shadow boundary a = 0.
pub fn eval_g_asymptotic(a: f64) -> Result<Complex64> {
    let a = GArgument::new(a)?.value();
    if a == 0.0 {
        return Err(EdgewaveError::SingularArgument);
    }
    let step = heaviside(-a) * SQRT_PI * EIP4 * phase_neg_a2(a);
    Ok(step + Complex64::new(0.0, 0.5 / a))
}

/// Unit step with the symmetric convention H(0) = 1/2.
pub fn heaviside(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}
