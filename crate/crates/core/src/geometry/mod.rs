//! Plane geometry of the triangle tiling.

mod chord;
mod fold;
mod point;
mod tiling;

pub use chord::{line_to_state, segment_to_state, state_to_segment, ChordState, PlaneSegment};
pub(crate) use chord::{clip_line, local_line_to_state};
pub use fold::{fold_scene, FoldedScene, FoldedTile};
pub use point::{refract_direction, Isometry, Vec2};
pub use tiling::{build_tiling, EdgeKey, Orientation, TilingModel, TriangleCoord};
