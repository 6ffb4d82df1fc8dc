use serde::{Deserialize, Serialize};

use super::point::Vec2;
use crate::angles::{Side, TriangleAngles};
use crate::error::Result;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Side C at the bottom.
    Positive,
    /// Side C at the top; the point reflection of a positive tile.
    Negative,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Lattice address of a tile.
///
/// Positive tile `(m, n)` is the base triangle translated by `m·e1 + n·e2`;
/// negative tile `(m, n)` is positive tile `(m, n)` reflected through the
/// midpoint of its side A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriangleCoord {
    pub m: i64,
    pub n: i64,
    pub orientation: Orientation,
}

impl TriangleCoord {
    pub const ORIGIN: TriangleCoord = TriangleCoord::positive(0, 0);

    pub const fn positive(m: i64, n: i64) -> Self {
        Self { m, n, orientation: Orientation::Positive }
    }

    pub const fn negative(m: i64, n: i64) -> Self {
        Self { m, n, orientation: Orientation::Negative }
    }

    /// The tile across `side`. Neighbours share the side label.
    pub fn neighbor(self, side: Side) -> Self {
        let (m, n) = (self.m, self.n);
        match (self.orientation, side) {
            (Orientation::Positive, Side::A) => Self::negative(m, n),
            (Orientation::Positive, Side::C) => Self::negative(m, n - 1),
            (Orientation::Positive, Side::B) => Self::negative(m - 1, n),
            (Orientation::Negative, Side::A) => Self::positive(m, n),
            (Orientation::Negative, Side::C) => Self::positive(m, n + 1),
            (Orientation::Negative, Side::B) => Self::positive(m + 1, n),
        }
    }

    /// Lattice indices `(i, j)` of the vertices in α, β, γ order; the plane
    /// position is `V_α + i·e1 + j·e2`.
    pub fn vertex_lattice(self) -> [(i64, i64); 3] {
        let (m, n) = (self.m, self.n);
        match self.orientation {
            Orientation::Positive => [(m, n), (m + 1, n), (m, n + 1)],
            Orientation::Negative => [(m + 1, n + 1), (m, n + 1), (m + 1, n)],
        }
    }

    /// The edge behind `side` as an unordered pair of lattice vertices.
    pub fn edge_key(self, side: Side) -> EdgeKey {
        let v = self.vertex_lattice();
        let (i, j) = side.vertex_indices();
        EdgeKey::new(v[i], v[j])
    }

    /// Translation taking `from` to this tile, when both share an orientation.
    pub fn shift_from(self, from: TriangleCoord) -> Option<(i64, i64)> {
        (self.orientation == from.orientation).then_some((self.m - from.m, self.n - from.n))
    }
}

/// Tiling edge between two lattice vertices, stored in sorted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeKey(pub (i64, i64), pub (i64, i64));

impl EdgeKey {
    pub fn new(a: (i64, i64), b: (i64, i64)) -> Self {
        if a <= b {
            Self(a, b)
        } else {
            Self(b, a)
        }
    }
}

/// The triangle tiling in plane coordinates, circumradius 1.
#[derive(Clone, Debug)]
pub struct TilingModel<F> {
    angles: TriangleAngles<F>,
    base: [Vec2<F>; 3],
    alpha_direction: F,
    e1: Vec2<F>,
    e2: Vec2<F>,
}

impl<F: Real> TilingModel<F> {
    /// Inscribes the base triangle in the unit circle with side C horizontal
    /// at the bottom. Counterclockwise arcs: V_α→V_β spans 2γ, V_β→V_γ spans
    /// 2α, V_γ→V_α spans 2β.
    pub fn new(angles: TriangleAngles<F>) -> Self {
        let half_pi = F::FRAC_PI_2();
        let two = F::of(2.0);
        let theta_alpha = -half_pi - angles.gamma();
        let theta_beta = -half_pi + angles.gamma();
        let theta_gamma = theta_beta + two * angles.alpha();
        let base = [
            Vec2::from_angle(theta_alpha),
            Vec2::from_angle(theta_beta),
            Vec2::from_angle(theta_gamma),
        ];
        Self {
            angles,
            base,
            alpha_direction: theta_alpha,
            e1: base[1] - base[0],
            e2: base[2] - base[0],
        }
    }

    pub fn angles(&self) -> &TriangleAngles<F> {
        &self.angles
    }

    /// Base triangle vertices (α, β, γ) on the unit circle.
    pub fn base_vertices(&self) -> [Vec2<F>; 3] {
        self.base
    }

    /// Polar angle of V_α in the base frame; X is measured from here.
    pub fn alpha_direction(&self) -> F {
        self.alpha_direction
    }

    /// `(e1, e2) = (V_β − V_α, V_γ − V_α)`.
    pub fn lattice_vectors(&self) -> (Vec2<F>, Vec2<F>) {
        (self.e1, self.e2)
    }

    pub fn lattice_vector(&self, dm: i64, dn: i64) -> Vec2<F> {
        self.e1 * F::of(dm as f64) + self.e2 * F::of(dn as f64)
    }

    pub fn lattice_point(&self, i: i64, j: i64) -> Vec2<F> {
        self.base[0] + self.lattice_vector(i, j)
    }

    /// Edge vectors `(e_A, e_B, e_C)` oriented so that the ±α, ±β, ±γ moves
    /// translate by ±e_A, ±e_B, ±e_C respectively.
    pub fn edge_vectors(&self) -> [Vec2<F>; 3] {
        let [va, vb, vc] = self.base;
        [vb - vc, vc - va, va - vb]
    }

    pub fn circumcenter(&self, tile: TriangleCoord) -> Vec2<F> {
        let offset = self.lattice_vector(tile.m, tile.n);
        match tile.orientation {
            Orientation::Positive => offset,
            Orientation::Negative => self.base[1] + self.base[2] + offset,
        }
    }

    fn frame_sign(tile: TriangleCoord) -> F {
        match tile.orientation {
            Orientation::Positive => F::one(),
            Orientation::Negative => -F::one(),
        }
    }

    pub fn vertices(&self, tile: TriangleCoord) -> [Vec2<F>; 3] {
        self.base.map(|v| self.to_plane(tile, v))
    }

    /// Endpoints of `side` in counterclockwise order around the tile.
    pub fn edge(&self, tile: TriangleCoord, side: Side) -> (Vec2<F>, Vec2<F>) {
        let v = self.vertices(tile);
        let (i, j) = side.vertex_indices();
        (v[i], v[j])
    }

    /// Plane point → the tile's own circle frame (circumcenter at the origin,
    /// vertices at the base positions).
    pub fn to_local(&self, tile: TriangleCoord, p: Vec2<F>) -> Vec2<F> {
        (p - self.circumcenter(tile)) * Self::frame_sign(tile)
    }

    /// Direction vector in the tile's circle frame.
    pub fn to_local_direction(&self, tile: TriangleCoord, d: Vec2<F>) -> Vec2<F> {
        d * Self::frame_sign(tile)
    }

    pub fn to_plane(&self, tile: TriangleCoord, q: Vec2<F>) -> Vec2<F> {
        self.circumcenter(tile) + q * Self::frame_sign(tile)
    }

    /// Lattice coordinates `(i, j)` (real valued) of a plane point.
    pub fn lattice_coordinates(&self, p: Vec2<F>) -> (F, F) {
        let d = p - self.base[0];
        let det = self.e1.cross(self.e2);
        (d.cross(self.e2) / det, self.e1.cross(d) / det)
    }
}

/// Builds the tiling after validating the angles.
pub fn build_tiling<F: Real>(alpha: F, beta: F, gamma: F) -> Result<TilingModel<F>> {
    Ok(TilingModel::new(TriangleAngles::new(alpha, beta, gamma)?))
}
