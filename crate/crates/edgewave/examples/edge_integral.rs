//! The Fresnel-type edge integral G(a) that underlies every field formula.
//!
//! Prints a table of G along the real axis, showing the transition from the
//! lit regime (a < 0, |G| near sqrt(pi)) through the shadow boundary at
//! a = 0 to the deep-shadow tail G ~ i/(2a), and compares against the
//! two-term asymptotic form.

use edgewave::special::{eval_g, eval_g_asymptotic};

fn main() {
    println!("{:>8}  {:>24}  {:>10}  {:>12}", "a", "G(a)", "|G|", "asym err");
    for a in [-8.0, -4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
        let g = eval_g(a).unwrap();
        let asym_err = match eval_g_asymptotic(a) {
            Ok(ga) => format!("{:.2e}", (g - ga).norm()),
            Err(_) => "  (sing.)".to_string(),
        };
        println!(
            "{a:>8.2}  {:>11.6} {:>+11.6}i  {:>10.6}  {asym_err:>12}",
            g.re,
            g.im,
            g.norm()
        );
    }
}
