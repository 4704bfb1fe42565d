//! The exact solution in the frame where the screen is at rest.
//!
//! Walks a circle around the edge and prints the field magnitude through
//! the reflected boundary, the lit region, and the shadow boundary, plus a
//! check that the tangential electric field vanishes on both screen faces.

use edgewave::kinematics::{sommerfeld_arguments, transform_wave, Motion, PrimedPoint, WaveParams};
use edgewave::sommerfeld::total_field_primed;
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() {
    let w = WaveParams::new(
        2.0,
        120f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.5, 0.0),
        1.0,
    )
    .unwrap();
    let pw = transform_wave(&w, &Motion::new(0.0).unwrap());
    let rho = 4.0;

    println!("field on the circle k'rho' = {:.1}:", pw.k_prime * rho);
    println!("{:>9}  {:>8}  {:>8}  {:>8}", "phi deg", "|E|", "u'", "v'");
    for n in 0..24 {
        let phi = -PI + 2.0 * PI * (n as f64 + 0.5) / 24.0;
        let p = PrimedPoint::from_polar(rho, phi, 0.0);
        let f = total_field_primed(&p, &pw).unwrap();
        let (u, v) = sommerfeld_arguments(&p, &pw);
        println!(
            "{:>9.1}  {:>8.4}  {u:>8.3}  {v:>8.3}",
            phi.to_degrees(),
            f.e_magnitude()
        );
    }

    let upper = total_field_primed(&PrimedPoint::from_polar(rho, PI, 0.0), &pw).unwrap();
    let lower = total_field_primed(&PrimedPoint::from_polar(rho, -PI, 0.0), &pw).unwrap();
    println!(
        "\ntangential E on the screen: upper face {:.2e}, lower face {:.2e}",
        upper.e[0].norm().max(upper.e[1].norm()),
        lower.e[0].norm().max(lower.e[1].norm())
    );
}
