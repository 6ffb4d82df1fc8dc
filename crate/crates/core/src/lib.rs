//! Tiling billiards on periodic triangle tilings.
//!
//! A ray crossing an edge of the tiling is reflected across that edge, as if
//! the refraction index were −1. Inside any one tile the ray is a chord of
//! the tile's circumcircle, described by a [`geometry::ChordState`]. The
//! crate traces such rays in the plane ([`trajectory::trace`]), follows
//! their chord coordinates through the 3-interval exchange with flips
//! ([`iet`]) and the two-dimensional polygon exchange ([`pet`]), and
//! analyses the resulting trajectories.
//!
//! Angle computations are generic over [`Scalar`]: `f32`, `f64`,
//! [`Rational`] multiples of π, and [`AyCubic`] for exact work in the
//! cubic field of the Arnoux-Yoccoz tiling. Plane geometry needs a
//! floating point [`Real`].

pub mod angles;
pub mod arnoux_yoccoz;
pub mod atlas;
pub mod audit;
pub mod bounds;
pub mod comoving;
pub mod cubic;
pub mod enclosed;
pub mod error;
pub mod export;
pub mod geometry;
pub mod iet;
pub mod moves;
pub mod pet;
pub mod rauzy;
pub mod scalar;
pub mod sturmian;
pub mod trajectory;

pub use angles::{Side, TriangleAngles};
pub use cubic::AyCubic;
pub use error::{Error, Result};
pub use scalar::{Rational, Real, Scalar};

pub use geometry::{ChordState, TilingModel, TriangleCoord};
pub use trajectory::{Classification, Trajectory};

pub type Angles = TriangleAngles<f64>;
pub type ExactAngles = TriangleAngles<Rational>;
pub type CubicAngles = TriangleAngles<AyCubic>;
pub type Tiling = TilingModel<f64>;
pub type State = ChordState<f64>;
pub type ExactState = ChordState<Rational>;
