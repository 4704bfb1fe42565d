//! Doppler shift and aberration of the incident wave as seen from the
//! moving screen.
//!
//! Sweeps the screen speed for a wave arriving at 60 degrees and prints the
//! transformed wavenumber, incidence angle, and amplitudes: all are scaled
//! by the same factor gamma (1 + beta cos theta).

use edgewave::kinematics::{transform_wave, Motion, WaveParams};
use num_complex::Complex64;

fn main() {
    let w = WaveParams::new(
        1.0,
        60f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        1.0,
    )
    .unwrap();
    println!(
        "{:>6}  {:>8}  {:>10}  {:>10}  {:>8}",
        "beta", "gamma", "k'/k", "theta' deg", "|A1'|"
    );
    for beta in [-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 0.99] {
        let m = Motion::new(beta).unwrap();
        let pw = transform_wave(&w, &m);
        println!(
            "{beta:>6.2}  {:>8.4}  {:>10.6}  {:>10.4}  {:>8.4}",
            m.gamma(),
            pw.k_prime / w.k,
            pw.theta_prime.to_degrees(),
            pw.a1_prime.norm()
        );
    }
    println!("\n(motion toward the source blueshifts and tips the apparent arrival forward)");
}
