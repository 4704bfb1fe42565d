use thiserror::Error;

/// Errors produced by the field-evaluation and geometry routines.
#[derive(Debug, Error)]
pub enum EdgewaveError {
    /// An input that must be finite was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFiniteInput(&'static str),

    /// A parameter violated its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The two-term asymptotic form of G diverges at a = 0.
    #[error("asymptotic form of G is singular at a = 0 (shadow boundary)")]
    SingularArgument,

    /// Evaluation requested at (or too close to) the screen edge, where the
    /// magnetic field has a physical 1/sqrt(rho) singularity.
    #[error("evaluation point within {rho:e} of the edge singularity")]
    EdgeSingularity { rho: f64 },

    /// The geometrical-optics field is discontinuous across a shadow
    /// boundary; evaluation was requested too close to one.
    #[error("point on a shadow boundary (u' = {u:e}, v' = {v:e})")]
    ShadowBoundary { u: f64, v: f64 },

    /// The diffracted-wave amplitude diverges on the singularity lines.
    #[error("point on a diffracted-field singularity line")]
    SingularityLine,

    /// Requested equiphase circle has negative radius: that wavefront has
    /// not been emitted yet.
    #[error("no wavefront for phase level {c_level} at this time (radius {radius} < 0)")]
    NoSuchWavefront { c_level: f64, radius: f64 },

    /// The extremal-z locus is undefined for a stationary screen.
    #[error("locus undefined for beta = 0 (equiphase circles are concentric)")]
    UndefinedLocus,

    /// A finite-difference region overlaps the screen or the edge.
    #[error("sampling region intersects the screen half-plane or edge")]
    RegionIntersectsScreen,

    /// A scan direction lies too close to a shadow boundary.
    #[error("direction {angle} rad is within {min_sep} rad of a shadow boundary")]
    DirectionNearBoundary { angle: f64, min_sep: f64 },

    /// Bad grid or option combination on the command level.
    #[error("usage: {0}")]
    Usage(String),

    /// File output failed.
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    /// Result serialization failed.
    #[error("serialization: {0}")]
    Serialization(#[from] serde_json::Error),

    /// A validation run exceeded its tolerance.
    #[error("validation tolerance breached: {what} = {value:e} > {tolerance:e}")]
    ToleranceBreach {
        what: String,
        value: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, EdgewaveError>;
