//! Splitting the exact field into geometrical optics plus edge diffraction.
//!
//! At three representative points (doubly lit, incident-only, deep shadow)
//! the decomposition is compared with the exact field, and the local
//! instantaneous frequency of the diffracted wave is printed: ahead of the
//! moving edge it is blueshifted, behind it redshifted.

use edgewave::asymptotics::{decompose, local_frequency};
use edgewave::kinematics::{LabPoint, Motion, WaveParams};
use edgewave::lab::lab_field_total;
use num_complex::Complex64;

fn main() {
    let w = WaveParams::new(
        40.0,
        120f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.5, 0.0),
        1.0,
    )
    .unwrap();
    let m = Motion::new(0.4).unwrap();
    let t = 0.2;
    let ex = m.edge_x(w.c, t);

    for (label, x, z) in [
        ("doubly lit (reflection wedge)", ex - 1.0, 0.6),
        ("incident only", ex + 2.0, 2.0),
        ("deep shadow", ex - 1.5, -2.0),
    ] {
        let p = LabPoint::new(x, z, t);
        let dec = decompose(&p, &w, &m).unwrap();
        let exact = lab_field_total(&p, &w, &m).unwrap();
        let err = dec.total.sub(&exact).max_abs() / exact.max_abs();
        println!("{label} at ({x:.2}, {z:.2}):");
        println!("  incident lit: {}, reflected lit: {}", dec.incident_lit, dec.reflected_lit);
        println!(
            "  |GO inc| = {:.3}, |GO refl| = {:.3}, |diffracted| = {:.3}",
            dec.go_incident.max_abs(),
            dec.go_reflected.max_abs(),
            dec.diffracted.max_abs()
        );
        println!(
            "  local omega / omega = {:.4}",
            local_frequency(&p, &w, &m).unwrap() / w.omega()
        );
        println!("  |decomposed - exact| / |exact| = {err:.2e}\n");
    }
}
