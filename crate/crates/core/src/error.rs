use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate triangle angles: {0}")]
    DegenerateAngles(String),

    /// The chord runs through a vertex of the tiling. `step` is the index of
    /// the edge crossing that lands on the vertex (0 for the seed chord).
    #[error("trajectory hits a tiling vertex at step {step}")]
    VertexHit { step: usize },

    #[error("state (X, tau) lies in a disallowed zone: the chord misses the triangle")]
    DisallowedState,

    #[error("chord does not intersect the tile")]
    NoIntersection,

    #[error("segment is too short to define a chord")]
    DegenerateSegment,

    #[error("direction is parallel to the edge")]
    GrazingIncidence,

    #[error("point lies on a region boundary of the polygon exchange")]
    BoundaryHit,

    #[error("point lies on a breakpoint of the interval exchange")]
    BreakpointHit,

    #[error("invalid interval exchange: {0}")]
    InvalidIet(String),

    #[error("trajectory is not periodic")]
    NotPeriodic,

    #[error("trajectory intersects itself: {0}")]
    SelfIntersection(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("edge word has odd length")]
    OddWord,

    #[error("edges {0}{1} do not form a two-edge move")]
    InvalidMovePair(char, char),

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("invalid simplex point: {0}")]
    InvalidSimplexPoint(String),

    #[error("angles are not rational multiples of pi")]
    NotRational,

    #[error("parse error: {0}")]
    Parse(String),
}
