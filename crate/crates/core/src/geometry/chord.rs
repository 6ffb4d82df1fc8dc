use serde::{Deserialize, Serialize};

use super::point::Vec2;
use super::tiling::{TilingModel, TriangleCoord};
use crate::angles::{Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::scalar::{circular_distance, wrap, Real, Scalar};

/// Position of a chord on the circumcircle.
///
/// `x` is the counterclockwise arc from V_α to the chord's front end and
/// `tau` the counterclockwise arc from the back end to the front end, both
/// in the unit of the scalar type.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChordState<S> {
    pub x: S,
    pub tau: S,
}

impl<S: Scalar> ChordState<S> {
    /// Reduces both coordinates into `[0, full turn)`.
    pub fn new(x: S, tau: S) -> Self {
        Self { x: wrap(x), tau: wrap(tau) }
    }

    /// Arc position of the back end.
    pub fn back(&self) -> S {
        wrap(self.x - self.tau)
    }

    /// The side the chord leaves through.
    pub fn exit_side(&self, angles: &TriangleAngles<S>) -> Side {
        angles.side_of(self.x)
    }

    /// The side the chord enters through.
    pub fn entry_side(&self, angles: &TriangleAngles<S>) -> Side {
        angles.side_of(self.back())
    }

    /// A chord meets the triangle in a segment exactly when its ends lie on
    /// arcs cut off by different sides.
    pub fn is_allowed(&self, angles: &TriangleAngles<S>) -> bool {
        self.exit_side(angles) != self.entry_side(angles)
    }

    /// Whether either end of the chord is within the vertex tolerance of a
    /// triangle vertex. A line meets the circle only at its two ends, so
    /// this is the same as the chord passing through a vertex.
    pub fn touches_vertex(&self, angles: &TriangleAngles<S>) -> bool {
        let eps = S::vertex_tolerance();
        let back = self.back();
        angles
            .breakpoints()
            .iter()
            .any(|&b| circular_distance(self.x, b) <= eps || circular_distance(back, b) <= eps)
    }

    /// Same state with the travel direction reversed.
    pub fn reversed(&self) -> Self {
        Self::new(self.back(), S::full_turn() - self.tau)
    }

    pub fn in_radians(&self) -> ChordState<f64> {
        ChordState { x: self.x.radians(), tau: self.tau.radians() }
    }

    /// Distance from the circumcenter to the chord's line.
    pub fn center_distance(&self) -> f64 {
        (self.tau.radians() / 2.0).cos().abs()
    }
}

/// One piece of a trajectory inside a single tile.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlaneSegment<F> {
    pub start: Vec2<F>,
    pub end: Vec2<F>,
    pub tile: TriangleCoord,
    pub edge_in: Option<Side>,
    pub edge_out: Option<Side>,
}

impl<F: Real> PlaneSegment<F> {
    pub fn direction(&self) -> Vec2<F> {
        self.end - self.start
    }

    pub fn length(&self) -> F {
        self.direction().norm()
    }
}

/// Intersection of the line `p + t·d` with a counterclockwise triangle.
/// Returns the entry and exit parameters with the sides that produced them.
pub(crate) fn clip_line<F: Real>(
    vertices: &[Vec2<F>; 3],
    p: Vec2<F>,
    d: Vec2<F>,
) -> Option<((F, Side), (F, Side))> {
    let mut t_in = (F::neg_infinity(), Side::A);
    let mut t_out = (F::infinity(), Side::A);
    for side in Side::ALL {
        let (i, j) = side.vertex_indices();
        let edge = vertices[j] - vertices[i];
        // inside ⇔ edge × (q − v_i) ≥ 0
        let num = edge.cross(p - vertices[i]);
        let den = edge.cross(d);
        if den == F::zero() {
            if num < F::zero() {
                return None;
            }
            continue;
        }
        let t = -num / den;
        if den > F::zero() {
            if t > t_in.0 {
                t_in = (t, side);
            }
        } else if t < t_out.0 {
            t_out = (t, side);
        }
    }
    (t_in.0 < t_out.0).then_some((t_in, t_out))
}

/// Places the chord of `state` in `tile` and clips it to the tile.
pub fn state_to_segment<F: Real>(
    tiling: &TilingModel<F>,
    tile: TriangleCoord,
    state: ChordState<F>,
) -> Result<PlaneSegment<F>> {
    let angles = tiling.angles();
    if state.touches_vertex(angles) {
        return Err(Error::VertexHit { step: 0 });
    }
    if !state.is_allowed(angles) {
        return Err(Error::NoIntersection);
    }
    let theta = tiling.alpha_direction();
    let front = Vec2::from_angle(theta + state.x);
    let back = Vec2::from_angle(theta + state.x - state.tau);
    let base = tiling.base_vertices();
    let ((t0, side_in), (t1, side_out)) =
        clip_line(&base, back, front - back).ok_or(Error::NoIntersection)?;
    let d = front - back;
    Ok(PlaneSegment {
        start: tiling.to_plane(tile, back + d * t0),
        end: tiling.to_plane(tile, back + d * t1),
        tile,
        edge_in: Some(side_in),
        edge_out: Some(side_out),
    })
}

/// Recovers the chord state of a segment by extending it to a full chord of
/// its tile's circumcircle.
pub fn segment_to_state<F: Real>(
    tiling: &TilingModel<F>,
    segment: &PlaneSegment<F>,
) -> Result<ChordState<F>> {
    let d = segment.end - segment.start;
    if !(d.norm() > F::of(1e-12)) {
        return Err(Error::DegenerateSegment);
    }
    line_to_state(tiling, segment.tile, segment.start, d)
}

/// Chord state of the line through `p` with direction `d`, in `tile`.
pub fn line_to_state<F: Real>(
    tiling: &TilingModel<F>,
    tile: TriangleCoord,
    p: Vec2<F>,
    d: Vec2<F>,
) -> Result<ChordState<F>> {
    local_line_to_state(tiling, tiling.to_local(tile, p), tiling.to_local_direction(tile, d))
}

/// Chord state of a line given in the circle frame shared by all tiles.
pub(crate) fn local_line_to_state<F: Real>(tiling: &TilingModel<F>, p: Vec2<F>, d: Vec2<F>) -> Result<ChordState<F>> {
    let u = d.normalized();
    // |p + t u|² = 1
    let b = p.dot(u);
    let c = p.dot(p) - F::one();
    let disc = b * b - c;
    if disc < F::zero() {
        return Err(Error::NoIntersection);
    }
    let root = disc.sqrt();
    let front = p + u * (-b + root);
    let back = p + u * (-b - root);
    let theta = tiling.alpha_direction();
    Ok(ChordState::new(front.angle() - theta, front.angle() - back.angle()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn equilateral() -> TilingModel<f64> {
        TilingModel::new(TriangleAngles::equilateral())
    }

    #[test]
    fn crosses_side_c_for_front_end_in_its_arc() {
        let t = equilateral();
        let seg = state_to_segment(&t, TriangleCoord::ORIGIN, ChordState::new(PI / 6.0, PI)).unwrap();
        assert_eq!(seg.edge_out, Some(Side::C));
        let (a, b) = t.edge(TriangleCoord::ORIGIN, Side::C);
        assert!((seg.end - a).cross(b - a).abs() < 1e-12);
    }

    #[test]
    fn short_chord_misses_the_triangle() {
        let t = equilateral();
        let err = state_to_segment(&t, TriangleCoord::ORIGIN, ChordState::new(PI / 6.0, PI / 100.0));
        assert_eq!(err.unwrap_err(), Error::NoIntersection);
    }

    #[test]
    fn chord_from_a_vertex_is_a_vertex_hit() {
        let t = equilateral();
        let err = state_to_segment(&t, TriangleCoord::ORIGIN, ChordState::new(0.0, PI));
        assert_eq!(err.unwrap_err(), Error::VertexHit { step: 0 });
    }

    #[test]
    fn round_trip_in_both_orientations() {
        let t = TilingModel::new(TriangleAngles::new(0.4, 1.0, PI - 1.4).unwrap());
        for tile in [TriangleCoord::positive(2, 1), TriangleCoord::negative(-3, 4)] {
            let s = ChordState::new(1.0, 2.0);
            let seg = state_to_segment(&t, tile, s).unwrap();
            let back = segment_to_state(&t, &seg).unwrap();
            assert!((back.x - 1.0).abs() < 1e-9 && (back.tau - 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn diameter_has_tau_pi() {
        let t = equilateral();
        let seg = PlaneSegment {
            start: Vec2::new(-0.2, -0.1),
            end: Vec2::new(0.4, 0.2),
            tile: TriangleCoord::ORIGIN,
            edge_in: None,
            edge_out: None,
        };
        let s = segment_to_state(&t, &seg).unwrap();
        assert!((s.tau - PI).abs() < 1e-9);
    }

    #[test]
    fn reversed_segment_gives_complementary_tau() {
        let t = equilateral();
        let s = ChordState::new(2.5, 1.9);
        let seg = state_to_segment(&t, TriangleCoord::negative(1, 1), s).unwrap();
        let rev = PlaneSegment { start: seg.end, end: seg.start, ..seg };
        let r = segment_to_state(&t, &rev).unwrap();
        assert!((r.tau - (2.0 * PI - 1.9)).abs() < 1e-9);
        let expect = s.reversed();
        assert!((r.x - expect.x).abs() < 1e-9);
    }

    #[test]
    fn degenerate_segment_is_rejected() {
        let t = equilateral();
        let p = Vec2::new(0.1, 0.1);
        let seg = PlaneSegment { start: p, end: p, tile: TriangleCoord::ORIGIN, edge_in: None, edge_out: None };
        assert_eq!(segment_to_state(&t, &seg).unwrap_err(), Error::DegenerateSegment);
    }
}
