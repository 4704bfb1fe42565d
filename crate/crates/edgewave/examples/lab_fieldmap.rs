//! Exact laboratory-frame field around a screen sliding at beta = 0.5.
//!
//! Renders |E| on a coarse grid as an ASCII density plot. The edge sits at
//! x = beta c t; the bright reflection wedge and the dragged shadow behind
//! the screen are both visibly rotated compared to the stationary pattern.

use edgewave::kinematics::{LabPoint, Motion, WaveParams};
use edgewave::lab::lab_field_total;
use num_complex::Complex64;

fn main() {
    let w = WaveParams::new(
        6.0,
        120f64.to_radians(),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        1.0,
    )
    .unwrap();
    let m = Motion::new(0.5).unwrap();
    let t = 1.0;
    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];

    for iz in (0..29).rev() {
        let z = -3.0 + 6.0 * iz as f64 / 28.0;
        let mut line = String::new();
        for ix in 0..72 {
            let x = -4.0 + 8.0 * ix as f64 / 71.0;
            let p = LabPoint::new(x, z, t);
            let mag = match lab_field_total(&p, &w, &m) {
                Ok(f) => f.e_magnitude(),
                Err(_) => 0.0,
            };
            let idx = ((mag / 2.2) * shades.len() as f64) as usize;
            line.push(shades[idx.min(shades.len() - 1)]);
        }
        println!("{line}");
    }
    println!(
        "\n|E| snapshot at t = {t}; screen: z = 0, x <= {:.2} (edge marked by the wedge tip)",
        m.edge_x(w.c, t)
    );
}
