//! Diffraction of a plane electromagnetic wave by a perfectly conducting
//! half-plane in uniform motion along its own surface.
//!
//! The stationary problem has a classical closed-form solution built from a
//! single Fresnel-type edge integral; the moving problem is obtained from it
//! by a Lorentz boost. This crate evaluates
//!
//! * the exact field in the co-moving (screen) frame and in the laboratory
//!   frame, for both polarizations of the incident wave,
//! * the high-frequency split into geometrical-optics and edge-diffracted
//!   waves, with the ray factors exposed individually,
//! * the geometric loci of the moving pattern: dragged shadow boundaries,
//!   eccentric circular equiphase fronts, extremal lines, and the
//!   singularity lines of the ray expansion,
//! * self-check residuals (Maxwell equations, boundary conditions) and
//!   convergence scans of the high-frequency approximation.
//!
//! Start with [`kinematics::WaveParams`] and [`kinematics::Motion`], then
//! evaluate fields with [`lab::lab_field_total`] or decompose them with
//! [`asymptotics::decompose`]. The `examples/` directory walks through each
//! capability; the `edgewave` binary exposes the same operations for batch
//! use.

pub mod asymptotics;
pub mod error;
pub mod geometry;
pub mod kinematics;
pub mod lab;
pub mod scenario;
pub mod sommerfeld;
pub mod special;
pub mod validation;

pub use error::{EdgewaveError, Result};
