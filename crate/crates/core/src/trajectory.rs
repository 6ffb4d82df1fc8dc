//! Tracing trajectories through the tiling.
//!
//! [`trace`] follows the ray geometrically: clip to the tile, reflect the
//! heading across the crossed edge, step into the neighbour. [`trace_symbolic`]
//! only iterates the crossing map on `(X, τ)` and tracks tiles through the
//! neighbour table. The two are independent and must agree.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::angles::{Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::{
    clip_line, local_line_to_state, refract_direction, state_to_segment, ChordState, PlaneSegment, TilingModel,
    TriangleCoord, Vec2,
};
use crate::iet::iet_step;
use crate::moves::{moves_of_word, Move};
use crate::scalar::{circular_distance, Real, Scalar};

pub const DEFAULT_MAX_CROSSINGS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Classification {
    /// Back in the seed tile in the seed position after `period` crossings.
    Periodic { period: usize },
    /// Seed position recurs after `period` crossings in a translated tile.
    DriftPeriodic { period: usize, lattice: (i64, i64), vector: Vec2<f64> },
    /// Neither happened within `steps` crossings.
    EscapingCutoff { steps: usize },
    /// Crossing number `step` lands on a tiling vertex.
    VertexHit { step: usize },
}

impl Classification {
    pub fn period(&self) -> Option<usize> {
        match self {
            Classification::Periodic { period } | Classification::DriftPeriodic { period, .. } => Some(*period),
            _ => None,
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, Classification::Periodic { .. })
    }

    /// Same verdict kind and period, ignoring the drift vector's rounding.
    pub fn agrees_with(&self, other: &Classification) -> bool {
        use Classification::*;
        match (self, other) {
            (DriftPeriodic { period: p, lattice: l, .. }, DriftPeriodic { period: q, lattice: m, .. }) => p == q && l == m,
            _ => self == other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Seed<S> {
    pub tile: TriangleCoord,
    pub state: ChordState<S>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Trajectory<F> {
    pub seed: Seed<F>,
    /// One segment per visited tile; the seed tile comes first.
    pub segments: Vec<PlaneSegment<F>>,
    /// Chord state of each segment, recovered from its plane coordinates.
    pub states: Vec<ChordState<F>>,
    pub edge_word: Vec<Side>,
    pub moves: Vec<Move>,
    pub verdict: Classification,
    /// Number of tile revisits compared against the first visit.
    pub revisits_checked: usize,
    /// Largest state deviation seen on a revisit, in radians.
    pub max_revisit_deviation: f64,
}

impl<F: Real> Trajectory<F> {
    /// Plane polyline through the segment endpoints.
    pub fn polyline(&self) -> Vec<Vec2<F>> {
        let mut pts: Vec<Vec2<F>> = self.segments.iter().map(|s| s.start).collect();
        if let Some(last) = self.segments.last() {
            pts.push(last.end);
        }
        pts
    }

    /// Tiles visited, in order.
    pub fn tiles(&self) -> Vec<TriangleCoord> {
        self.segments.iter().map(|s| s.tile).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceOptions {
    pub max_crossings: usize,
    /// Number of full periods to follow before stopping. Extra laps only
    /// serve to compare more tile revisits.
    pub laps: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self { max_crossings: DEFAULT_MAX_CROSSINGS, laps: 1 }
    }
}

fn revisit_tolerance<S: Scalar>() -> S {
    if S::EXACT {
        return S::zero();
    }
    let loose = S::from_radians(1e-6).unwrap_or_else(S::zero);
    if loose > S::recurrence_tolerance() {
        loose
    } else {
        S::recurrence_tolerance()
    }
}

fn state_gap<S: Scalar>(a: &ChordState<S>, b: &ChordState<S>) -> S {
    let dx = circular_distance(a.x, b.x);
    let dt = circular_distance(a.tau, b.tau);
    if dx > dt {
        dx
    } else {
        dt
    }
}

/// Geometric trace with default options apart from the crossing cap.
pub fn trace<F: Real>(
    tiling: &TilingModel<F>,
    tile: TriangleCoord,
    state: ChordState<F>,
    max_crossings: usize,
) -> Result<Trajectory<F>> {
    trace_with(tiling, tile, state, TraceOptions { max_crossings, laps: 1 })
}

/// Follows the ray from the chord `state` in `tile` across edges.
///
/// Every revisit of a tile is compared with the first visit; a mismatch
/// beyond `1e-6` is reported as `InvariantViolation`.
pub fn trace_with<F: Real>(
    tiling: &TilingModel<F>,
    tile: TriangleCoord,
    state: ChordState<F>,
    options: TraceOptions,
) -> Result<Trajectory<F>> {
    let angles = *tiling.angles();
    let first = state_to_segment(tiling, tile, state)?;
    let seed_state = ChordState::new(state.x, state.tau);
    let mut segments = vec![first];
    let mut states = vec![seed_state];
    let mut word = Vec::new();
    let mut visits: HashMap<TriangleCoord, ChordState<F>> = HashMap::from([(tile, seed_state)]);
    let mut revisits_checked = 0;
    let mut max_dev = F::zero();
    let revisit_tol = revisit_tolerance::<F>();
    let mut laps_done = 0;
    let mut first_period = None;
    let mut verdict = Classification::EscapingCutoff { steps: options.max_crossings };

    // The walk runs in the circle frame shared by all tiles, so rounding
    // does not grow with the distance from the origin. Crossing side s maps
    // a point e to 2·M_s − e and a direction u to −u, M_s being the midpoint
    // of side s.
    let base = tiling.base_vertices();
    let theta = tiling.alpha_direction();
    let front = Vec2::from_angle(theta + seed_state.x);
    let back = Vec2::from_angle(theta + seed_state.x - seed_state.tau);
    let mut u = (front - back).normalized();
    let (_, (t_exit, _)) = clip_line(&base, back, front - back).ok_or(Error::NoIntersection)?;
    let mut exit = back + (front - back) * t_exit;

    let mut current = first;
    for step in 1..=options.max_crossings {
        let side = current.edge_out.ok_or_else(|| Error::InvariantViolation("segment without exit edge".into()))?;
        let (i, j) = side.vertex_indices();
        u = refract_direction(u, base[j] - base[i])?.normalized();
        let entry = base[i] + base[j] - exit;
        let next_tile = current.tile.neighbor(side);
        let ((_, _), (t_out, side_out)) = clip_line(&base, entry, u)
            .ok_or_else(|| Error::InvariantViolation(format!("ray misses tile {next_tile:?} at step {step}")))?;
        exit = entry + u * t_out;
        let next = PlaneSegment {
            start: current.end,
            end: tiling.to_plane(next_tile, exit),
            tile: next_tile,
            edge_in: Some(side),
            edge_out: Some(side_out),
        };
        let next_state = local_line_to_state(tiling, entry, u)?;
        word.push(side);
        segments.push(next);
        states.push(next_state);
        current = next;

        if next_state.touches_vertex(&angles) {
            verdict = Classification::VertexHit { step };
            break;
        }

        if let Some(prev) = visits.get(&next_tile) {
            let gap = state_gap(prev, &next_state);
            revisits_checked += 1;
            if gap > max_dev {
                max_dev = gap;
            }
            if gap > revisit_tol {
                return Err(Error::InvariantViolation(format!(
                    "tile {next_tile:?} revisited at step {step} in a different position (gap {gap})"
                )));
            }
        } else {
            visits.insert(next_tile, next_state);
        }

        if next_tile == tile {
            first_period.get_or_insert(step);
            laps_done += 1;
            if laps_done >= options.laps {
                break;
            }
            continue;
        }
        if first_period.is_none()
            && next_tile.orientation == tile.orientation
            && state_gap(&seed_state, &next_state) <= F::recurrence_tolerance()
        {
            let lattice = (next_tile.m - tile.m, next_tile.n - tile.n);
            let v = tiling.circumcenter(next_tile) - tiling.circumcenter(tile);
            verdict = Classification::DriftPeriodic {
                period: step,
                lattice,
                vector: Vec2::new(v.x.radians(), v.y.radians()),
            };
            break;
        }
    }
    if let Some(period) = first_period {
        verdict = Classification::Periodic { period };
    }
    let even = word.len() - word.len() % 2;
    let moves = moves_of_word(&word[..even])?;
    Ok(Trajectory {
        seed: Seed { tile, state },
        segments,
        states,
        edge_word: word,
        moves,
        verdict,
        revisits_checked,
        max_revisit_deviation: max_dev.radians(),
    })
}

/// Result of iterating the crossing map alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymbolicTrace<S> {
    pub edge_word: Vec<Side>,
    pub moves: Vec<Move>,
    /// Tile after each crossing, starting with the seed tile.
    pub lattice_track: Vec<TriangleCoord>,
    pub states: Vec<ChordState<S>>,
    pub verdict: Classification,
}

/// [`trace_symbolic_from`] starting in the positive tile at the origin.
pub fn trace_symbolic<S: Scalar>(
    angles: &TriangleAngles<S>,
    state: ChordState<S>,
    max_crossings: usize,
) -> Result<SymbolicTrace<S>> {
    trace_symbolic_from(angles, TriangleCoord::ORIGIN, state, max_crossings)
}

/// Iterates the crossing map on `(X, τ)`, tracking the tile through the
/// neighbour table. Classification uses state recurrence together with the
/// lattice position.
pub fn trace_symbolic_from<S: Scalar>(
    angles: &TriangleAngles<S>,
    tile: TriangleCoord,
    state: ChordState<S>,
    max_crossings: usize,
) -> Result<SymbolicTrace<S>> {
    let lattice_model = TilingModel::<f64>::new(angles.to_real());
    let seed = ChordState::new(state.x, state.tau);
    if seed.touches_vertex(angles) {
        return Err(Error::VertexHit { step: 0 });
    }
    if !seed.is_allowed(angles) {
        return Err(Error::DisallowedState);
    }
    let mut word = Vec::new();
    let mut track = vec![tile];
    let mut states = vec![seed];
    let mut verdict = Classification::EscapingCutoff { steps: max_crossings };
    let mut s = seed;
    let mut here = tile;
    let revisit_tol = revisit_tolerance::<S>();
    for step in 1..=max_crossings {
        let (next, side) = match iet_step(angles, s) {
            Ok(v) => v,
            Err(Error::VertexHit { .. }) => {
                verdict = Classification::VertexHit { step: step - 1 };
                break;
            }
            Err(e) => return Err(e),
        };
        s = next;
        here = here.neighbor(side);
        word.push(side);
        track.push(here);
        states.push(s);
        if s.touches_vertex(angles) {
            verdict = Classification::VertexHit { step };
            break;
        }
        if here == tile {
            if state_gap(&seed, &s) > revisit_tol {
                return Err(Error::InvariantViolation(format!(
                    "seed tile revisited at step {step} in a different position"
                )));
            }
            verdict = Classification::Periodic { period: step };
            break;
        }
        if here.orientation == tile.orientation && state_gap(&seed, &s) <= S::recurrence_tolerance() {
            let lattice = (here.m - tile.m, here.n - tile.n);
            let v = lattice_model.lattice_vector(lattice.0, lattice.1);
            verdict = Classification::DriftPeriodic { period: step, lattice, vector: v };
            break;
        }
    }
    let even = word.len() - word.len() % 2;
    let moves = moves_of_word(&word[..even])?;
    Ok(SymbolicTrace { edge_word: word, moves, lattice_track: track, states, verdict })
}
