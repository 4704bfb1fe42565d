//! Geometric loci of the moving diffraction pattern.
//!
//! Prints the dragged shadow boundaries (which coincide with the
//! singularity rays of the ray expansion), the eccentric equiphase circles
//! of the diffracted wave, and the extremal-z rays, for a screen at
//! beta = 0.5.

use edgewave::geometry::{
    equiphase_circle, extremal_z_lines, shadow_boundary, singularity_lines, BoundaryKind,
};
use edgewave::kinematics::{Motion, WaveParams};
use num_complex::Complex64;

fn main() {
    let w = WaveParams::new(
        1.0,
        120f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        1.0,
    )
    .unwrap();
    let m = Motion::new(0.5).unwrap();
    let t = 1.0;

    println!("edge at ({:.3}, 0)", m.edge_x(w.c, t));
    for (label, kind) in [
        ("incident shadow boundary", BoundaryKind::Incident),
        ("reflected shadow boundary", BoundaryKind::Reflected),
    ] {
        let b = shadow_boundary(kind, &w, &m, t);
        println!(
            "{label}: direction ({:+.4}, {:+.4}), angle {:+.2} deg",
            b.direction[0],
            b.direction[1],
            b.direction[1].atan2(b.direction[0]).to_degrees()
        );
    }
    let [si, _] = singularity_lines(&w, &m, t);
    println!(
        "singularity rays coincide with the boundaries: ({:+.4}, {:+.4})",
        si.direction[0], si.direction[1]
    );

    println!("\nequiphase circles (centers trail the edge by beta * radius):");
    for c_level in [0.25, 0.5, 1.0, 2.0] {
        let c = equiphase_circle(c_level, &w, &m, t).unwrap();
        let offset = m.edge_x(w.c, t) - c.center[0];
        println!(
            "  C = {c_level:<5} center ({:+.4}, 0)  radius {:.4}  edge offset/radius = {:.3}",
            c.center[0],
            c.radius,
            offset / c.radius
        );
    }

    let lines = extremal_z_lines(&w, &m, t).unwrap();
    println!(
        "\nextremal-z rays: direction ({:+.4}, {:+.4}) and mirror, cos phi' = {}",
        lines.upper.direction[0], lines.upper.direction[1], lines.cos_phi_prime
    );
}
