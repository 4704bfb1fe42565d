//! Numerical self-audit of the closed-form fields.
//!
//! Checks the laboratory field against both curl equations by central
//! differences, the perfect-conductor condition on the screen, and the
//! decay rate of the ray-expansion error with distance from the edge.

use edgewave::kinematics::{Motion, WaveParams};
use edgewave::validation::{boundary_residual, convergence_scan, maxwell_residual, SampleRegion};
use num_complex::Complex64;

fn main() {
    let w = WaveParams::new(
        2.0,
        120f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.6, 0.0),
        1.0,
    )
    .unwrap();
    let m = Motion::new(0.6).unwrap();

    let region = SampleRegion {
        x_min: 0.6,
        x_max: 2.4,
        nx: 6,
        z_min: 0.4,
        z_max: 1.4,
        nz: 4,
    };
    println!("curl-equation residual (relative), central differences:");
    for h in [4e-3, 2e-3, 1e-3] {
        let r = maxwell_residual(&w, &m, 0.2, &region, Some(h)).unwrap();
        println!("  h = {h:.0e} wavelengths: {:.3e}", r.max_abs_residual);
    }

    let b = boundary_residual(&w, &m, &[0.5, 2.0, 10.0, 50.0]).unwrap();
    println!("\nscreen-face residual (tangential E, normal cB): {:.3e}", b.max_abs_residual);

    let dirs: Vec<f64> = [20f64, 130.0, 170.0, -130.0, -170.0]
        .iter()
        .map(|d| d.to_radians())
        .collect();
    let scan = convergence_scan(&w, &m, 0.2, &dirs, &[1e2, 1e3, 1e4]).unwrap();
    println!("\nray-expansion error vs k*rho:");
    for row in &scan.rows {
        println!("  k rho = {:>7.0}: {:.3e}", row.k_rho, row.max_rel_error);
    }
    println!("fitted log-log slope: {:.3} (leading correction is O(1/(k rho)))", scan.slope);
}
