//! Geometric loci of the moving-edge diffraction pattern.
//!
//! Everything here lives in the laboratory (x, z) plane at a fixed instant:
//! the two shadow boundaries dragged along by the edge, the circular
//! equiphase fronts of the diffracted wave, the rays on which the field is
//! extremal in z, and the singularity lines of the high-frequency
//! decomposition. All of these are either half-lines anchored at the
//! instantaneous edge position or circles; no field evaluation is involved.

use serde::{Deserialize, Serialize};

use crate::error::{EdgewaveError, Result};
use crate::kinematics::{Motion, WaveParams};

/// Which geometrical-optics wave a boundary belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryKind {
    Incident,
    Reflected,
}

/// A ray from `origin` along the unit vector `direction`.
///
/// `valid_side_sign` records which half-space (sign of z) the ray bounds;
/// `degenerate` flags grazing incidence, where the ray collapses onto the
/// screen itself.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct HalfLine {
    pub origin: [f64; 2],
    pub direction: [f64; 2],
    pub valid_side_sign: f64,
    pub degenerate: bool,
}

impl HalfLine {
    /// Perpendicular distance from a point to the ray (infinite-line
    /// distance if the projection falls on the ray, distance to the origin
    /// otherwise).
    pub fn distance_to(&self, x: f64, z: f64) -> f64 {
        let dx = x - self.origin[0];
        let dz = z - self.origin[1];
        let along = dx * self.direction[0] + dz * self.direction[1];
        if along <= 0.0 {
            dx.hypot(dz)
        } else {
            (dx * self.direction[1] - dz * self.direction[0]).abs()
        }
    }
}

/// One circular equiphase front of the diffracted wave.
///
/// The level `c_level` labels the front: it is the emission parameter of the
/// expanding circle. The edge sits off-center: its distance from the center
/// is exactly `beta * radius`, so the fronts are eccentric circles dragged
/// along by the motion.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EquiphaseCircle {
    pub c_level: f64,
    pub center: [f64; 2],
    pub radius: f64,
}

/// The pair of rays on which the diffracted wave's z-component vanishes and
/// |field| is extremal across z, together with the screen-frame angle they
/// correspond to (cos phi' = -beta).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ExtremalZLines {
    pub upper: HalfLine,
    pub lower: HalfLine,
    pub cos_phi_prime: f64,
}

fn edge_origin(w: &WaveParams, m: &Motion, t: f64) -> [f64; 2] {
    [m.edge_x(w.c, t), 0.0]
}

/// Shadow boundary of the incident or reflected wave at laboratory time `t`.
///
/// Both are half-lines from the instantaneous edge position. Relative to the
/// stationary problem they are rotated towards the motion by the aberration
/// of the transformed incidence angle.
pub fn shadow_boundary(kind: BoundaryKind, w: &WaveParams, m: &Motion, t: f64) -> HalfLine {
    let beta = m.beta();
    let (st, ct) = w.theta.sin_cos();
    let (dx, dz) = match kind {
        BoundaryKind::Incident => (-(ct + beta), -st),
        BoundaryKind::Reflected => (-(ct + beta), st),
    };
    let n = dx.hypot(dz);
    let degenerate = st.abs() < 1e-12;
    HalfLine {
        origin: edge_origin(w, m, t),
        direction: if n == 0.0 { [0.0, 0.0] } else { [dx / n, dz / n] },
        valid_side_sign: match kind {
            BoundaryKind::Incident => -1.0,
            BoundaryKind::Reflected => 1.0,
        },
        degenerate,
    }
}

/// Equiphase circle of level `c_level` at laboratory time `t`.
///
/// Fails with [`EdgewaveError::NoSuchWavefront`] when the front has not yet
/// been emitted (non-positive radius).
pub fn equiphase_circle(c_level: f64, w: &WaveParams, m: &Motion, t: f64) -> Result<EquiphaseCircle> {
    let beta = m.beta();
    let g2 = m.gamma() * m.gamma();
    let radius = w.c * t + g2 * c_level;
    if radius <= 0.0 {
        return Err(EdgewaveError::NoSuchWavefront { c_level, radius });
    }
    Ok(EquiphaseCircle {
        c_level,
        center: [-beta * g2 * c_level, 0.0],
        radius,
    })
}

/// The two rays of extremal z-dependence at laboratory time `t`.
///
/// They exist only for a moving screen; for beta = 0 every direction is
/// equivalent and the locus is undefined.
pub fn extremal_z_lines(w: &WaveParams, m: &Motion, t: f64) -> Result<ExtremalZLines> {
    let beta = m.beta();
    if beta == 0.0 {
        return Err(EdgewaveError::UndefinedLocus);
    }
    let n = (1.0 + beta * beta).sqrt();
    let origin = edge_origin(w, m, t);
    let mk = |sign: f64| HalfLine {
        origin,
        direction: [-beta / n, sign / n],
        valid_side_sign: sign,
        degenerate: false,
    };
    Ok(ExtremalZLines {
        upper: mk(1.0),
        lower: mk(-1.0),
        cos_phi_prime: -beta,
    })
}

/// Rays on which the ray-optical diffracted amplitude diverges. These
/// coincide with the two shadow boundaries.
pub fn singularity_lines(w: &WaveParams, m: &Motion, t: f64) -> [HalfLine; 2] {
    [
        shadow_boundary(BoundaryKind::Incident, w, m, t),
        shadow_boundary(BoundaryKind::Reflected, w, m, t),
    ]
}
