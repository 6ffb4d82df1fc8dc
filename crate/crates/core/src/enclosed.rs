//! The part of the tiling enclosed by a periodic trajectory.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{EdgeKey, TilingModel, Vec2};
use crate::trajectory::{Classification, Trajectory};

/// Tiling vertices and edges inside a closed trajectory.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnclosedGraph {
    /// Lattice indices `(i, j)` of enclosed vertices, sorted.
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<EdgeKey>,
    pub is_tree: bool,
    pub is_path: bool,
    pub period: usize,
}

impl EnclosedGraph {
    /// `period == 4·|vertices| + 2`.
    pub fn satisfies_period_formula(&self) -> bool {
        self.period == 4 * self.vertices.len() + 2
    }
}

/// Point-in-polygon by winding number, with edges bucketed by height.
pub struct WindingIndex {
    poly: Vec<Vec2<f64>>,
    y0: f64,
    band: f64,
    buckets: Vec<Vec<usize>>,
}

impl WindingIndex {
    /// `poly` is a closed loop; the last point connects back to the first.
    pub fn new(poly: Vec<Vec2<f64>>) -> Self {
        let n = poly.len();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in &poly {
            lo = lo.min(p.y);
            hi = hi.max(p.y);
        }
        let count = (n / 2).max(1);
        let band = ((hi - lo) / count as f64).max(1e-9);
        let mut buckets = vec![Vec::new(); count + 1];
        for i in 0..n {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            let first = (((a.y.min(b.y)) - lo) / band).floor() as usize;
            let last = ((((a.y.max(b.y)) - lo) / band).floor() as usize).min(count);
            for bucket in &mut buckets[first..=last] {
                bucket.push(i);
            }
        }
        Self { poly, y0: lo, band, buckets }
    }

    pub fn winding_number(&self, p: Vec2<f64>) -> i64 {
        let k = (p.y - self.y0) / self.band;
        if !(k >= 0.0) || k as usize >= self.buckets.len() {
            return 0;
        }
        let n = self.poly.len();
        let mut wn = 0;
        for &i in &self.buckets[k as usize] {
            wn += crossing(self.poly[i], self.poly[(i + 1) % n], p);
        }
        wn
    }

    pub fn contains(&self, p: Vec2<f64>) -> bool {
        self.winding_number(p) != 0
    }
}

/// Contribution of the edge `a → b` to the winding number around `p`.
pub fn crossing(a: Vec2<f64>, b: Vec2<f64>, p: Vec2<f64>) -> i64 {
    let left = (b - a).cross(p - a);
    if a.y <= p.y {
        if b.y > p.y && left > 0.0 {
            return 1;
        }
    } else if b.y <= p.y && left < 0.0 {
        return -1;
    }
    0
}

fn segments_cross(a: Vec2<f64>, b: Vec2<f64>, c: Vec2<f64>, d: Vec2<f64>) -> bool {
    let o1 = (b - a).cross(c - a);
    let o2 = (b - a).cross(d - a);
    let o3 = (d - c).cross(a - c);
    let o4 = (d - c).cross(b - c);
    let eps = 1e-12;
    (o1 > eps && o2 < -eps || o1 < -eps && o2 > eps) && (o3 > eps && o4 < -eps || o3 < -eps && o4 > eps)
}

/// Checks that the closed loop through `poly` has no crossings between
/// non-adjacent edges. Returns the first offending pair.
pub fn find_self_intersection(poly: &[Vec2<f64>]) -> Option<(usize, usize)> {
    let n = poly.len();
    if n < 4 {
        return None;
    }
    let cell = (0..n).map(|i| (poly[(i + 1) % n] - poly[i]).norm()).fold(1e-9, f64::max);
    let key = |v: f64| (v / cell).floor() as i64;
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for gx in key(a.x.min(b.x))..=key(a.x.max(b.x)) {
            for gy in key(a.y.min(b.y))..=key(a.y.max(b.y)) {
                grid.entry((gx, gy)).or_default().push(i);
            }
        }
    }
    let mut seen = HashSet::new();
    for members in grid.values() {
        for (u, &i) in members.iter().enumerate() {
            for &j in &members[u + 1..] {
                let (i, j) = (i.min(j), i.max(j));
                if j - i <= 1 || (i == 0 && j == n - 1) || !seen.insert((i, j)) {
                    continue;
                }
                if segments_cross(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]) {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// Closed loop of a periodic trajectory: the entry point of each tile.
pub fn closed_loop(trajectory: &Trajectory<f64>) -> Result<Vec<Vec2<f64>>> {
    let Classification::Periodic { period } = trajectory.verdict else {
        return Err(Error::NotPeriodic);
    };
    Ok(trajectory.segments[..period].iter().map(|s| s.start).collect())
}

/// Enclosed vertices and edges of a periodic trajectory.
pub fn enclosed_graph(trajectory: &Trajectory<f64>, tiling: &TilingModel<f64>) -> Result<EnclosedGraph> {
    let poly = closed_loop(trajectory)?;
    let period = poly.len();
    if let Some((i, j)) = find_self_intersection(&poly) {
        return Err(Error::SelfIntersection(format!("segments {i} and {j} cross")));
    }

    // Lattice box covering the loop.
    let (mut imin, mut imax, mut jmin, mut jmax) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in &poly {
        let (i, j) = tiling.lattice_coordinates(*p);
        imin = imin.min(i);
        imax = imax.max(i);
        jmin = jmin.min(j);
        jmax = jmax.max(j);
    }
    let index = WindingIndex::new(poly);
    let mut inside = BTreeSet::new();
    for i in (imin.floor() as i64)..=(imax.ceil() as i64) {
        for j in (jmin.floor() as i64)..=(jmax.ceil() as i64) {
            if index.contains(tiling.lattice_point(i, j)) {
                inside.insert((i, j));
            }
        }
    }

    let crossed: HashSet<EdgeKey> = trajectory.segments[..period]
        .iter()
        .filter_map(|s| s.edge_out.map(|side| s.tile.edge_key(side)))
        .collect();
    let mut edges = Vec::new();
    for &(i, j) in &inside {
        for other in [(i + 1, j), (i, j + 1), (i - 1, j + 1)] {
            let key = EdgeKey::new((i, j), other);
            if inside.contains(&other) && !crossed.contains(&key) {
                edges.push(key);
            }
        }
    }
    edges.sort();

    let (is_tree, is_path) = tree_flags(&inside, &edges);
    Ok(EnclosedGraph { vertices: inside.into_iter().collect(), edges, is_tree, is_path, period })
}

/// `(is_tree, is_path)` for a graph on `vertices`.
pub fn tree_flags(vertices: &BTreeSet<(i64, i64)>, edges: &[EdgeKey]) -> (bool, bool) {
    if vertices.is_empty() || edges.len() + 1 != vertices.len() {
        return (false, false);
    }
    let mut adj: HashMap<(i64, i64), Vec<(i64, i64)>> = HashMap::new();
    for e in edges {
        adj.entry(e.0).or_default().push(e.1);
        adj.entry(e.1).or_default().push(e.0);
    }
    let start = *vertices.iter().next().unwrap();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in adj.get(&v).into_iter().flatten() {
            if seen.insert(*w) {
                queue.push_back(*w);
            }
        }
    }
    let connected = seen.len() == vertices.len();
    let path = connected && adj.values().all(|n| n.len() <= 2);
    (connected, path)
}
