use serde::{Deserialize, Serialize};

use super::point::{Isometry, Vec2};
use super::tiling::{Orientation, TilingModel, TriangleCoord};
use crate::scalar::Real;
use crate::trajectory::Trajectory;

/// A visited tile carried into the seed tile's circle frame.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FoldedTile<F> {
    pub tile: TriangleCoord,
    pub vertices: [Vec2<F>; 3],
    /// `true` when the fold is a rotation, `false` for a reflection.
    pub rotation: bool,
}

/// Every tile of a trajectory folded onto the seed tile across the crossed
/// edges. All folded triangles are inscribed in the unit circle and every
/// folded segment lies on one chord.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FoldedScene<F> {
    /// Back and front ends of the common chord on the unit circle.
    pub chord: (Vec2<F>, Vec2<F>),
    pub tiles: Vec<FoldedTile<F>>,
    pub segments: Vec<(Vec2<F>, Vec2<F>)>,
}

pub fn fold_scene<F: Real>(tiling: &TilingModel<F>, trajectory: &Trajectory<F>) -> FoldedScene<F> {
    let seed = trajectory.seed;
    let sign = match seed.tile.orientation {
        Orientation::Positive => F::one(),
        Orientation::Negative => -F::one(),
    };
    let theta = tiling.alpha_direction();
    let front = Vec2::from_angle(theta + seed.state.x);
    let back = Vec2::from_angle(theta + seed.state.x - seed.state.tau);

    let mut fold = Isometry::scaled_about(tiling.circumcenter(seed.tile), sign);
    let mut tiles = Vec::with_capacity(trajectory.segments.len());
    let mut segments = Vec::with_capacity(trajectory.segments.len());
    for (k, seg) in trajectory.segments.iter().enumerate() {
        if k > 0 {
            let side = trajectory.edge_word[k - 1];
            let (a, b) = tiling.edge(seg.tile, side);
            fold = fold.compose(&Isometry::reflection(a, b));
        }
        tiles.push(FoldedTile {
            tile: seg.tile,
            vertices: tiling.vertices(seg.tile).map(|v| fold.apply(v)),
            rotation: fold.preserves_orientation(),
        });
        segments.push((fold.apply(seg.start), fold.apply(seg.end)));
    }
    FoldedScene { chord: (back, front), tiles, segments }
}
