//! Sweeps of τ towards π on a gasket-point tiling.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angles::TriangleAngles;
use crate::enclosed::enclosed_graph;
use crate::error::{Error, Result};
use crate::geometry::{ChordState, TilingModel, TriangleCoord};
use crate::rauzy::rauzy_triangle;
use crate::trajectory::{trace, Classification, Trajectory};

/// `τ_k = π − π·c·2^(−k/subdivisions)` for `k` in `first..first + count`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TauSequence {
    pub c: f64,
    pub subdivisions: u32,
    pub first: u32,
    pub count: u32,
}

impl Default for TauSequence {
    fn default() -> Self {
        Self { c: 1.0, subdivisions: 1, first: 1, count: 12 }
    }
}

impl TauSequence {
    pub fn values(&self) -> Vec<f64> {
        let pi = std::f64::consts::PI;
        let s = f64::from(self.subdivisions.max(1));
        (self.first..self.first + self.count).map(|k| pi - pi * self.c * (-(f64::from(k)) / s).exp2()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AtlasItem {
    pub index: usize,
    pub tau: f64,
    pub verdict: Classification,
    /// Enclosed vertex count for periodic items.
    pub enclosed_vertices: Option<usize>,
    pub is_tree: Option<bool>,
    pub formula_holds: Option<bool>,
    /// Number of distinct tiles the trajectory passes through.
    pub tiles_hit: usize,
    pub error: Option<String>,
    #[serde(skip)]
    pub trajectory: Option<Trajectory<f64>>,
}

impl AtlasItem {
    pub fn period(&self) -> Option<usize> {
        match self.verdict {
            Classification::Periodic { period } => Some(period),
            _ => None,
        }
    }
}

/// Traces every τ of the sequence from `x` in the origin tile. Items are
/// independent and computed in parallel; per-item failures are recorded.
pub fn atlas_sweep(tiling: &TilingModel<f64>, x: f64, taus: &[f64], max_crossings: usize) -> Vec<AtlasItem> {
    taus.par_iter()
        .enumerate()
        .map(|(index, &tau)| atlas_item(tiling, index, x, tau, max_crossings))
        .collect()
}

fn atlas_item(tiling: &TilingModel<f64>, index: usize, x: f64, tau: f64, max_crossings: usize) -> AtlasItem {
    let mut item = AtlasItem {
        index,
        tau,
        verdict: Classification::EscapingCutoff { steps: 0 },
        enclosed_vertices: None,
        is_tree: None,
        formula_holds: None,
        tiles_hit: 0,
        error: None,
        trajectory: None,
    };
    match trace(tiling, TriangleCoord::ORIGIN, ChordState::new(x, tau), max_crossings) {
        Ok(t) => {
            item.verdict = t.verdict;
            let mut tiles = t.tiles();
            tiles.sort();
            tiles.dedup();
            item.tiles_hit = tiles.len();
            if t.verdict.is_periodic() {
                match enclosed_graph(&t, tiling) {
                    Ok(g) => {
                        item.enclosed_vertices = Some(g.vertices.len());
                        item.is_tree = Some(g.is_tree);
                        item.formula_holds = Some(g.satisfies_period_formula());
                    }
                    Err(e) => item.error = Some(e.to_string()),
                }
            }
            item.trajectory = Some(t);
        }
        Err(Error::VertexHit { step }) => item.verdict = Classification::VertexHit { step },
        Err(e) => item.error = Some(e.to_string()),
    }
    item
}

/// Tiling of a gasket point, checked before sweeping.
pub fn gasket_tiling(point: [f64; 3]) -> Result<TilingModel<f64>> {
    let angles: TriangleAngles<f64> = rauzy_triangle(point)?;
    Ok(TilingModel::new(angles))
}

/// Periodic items whose period exceeds every earlier periodic item, in
/// sweep order.
pub fn increasing_loops(items: &[AtlasItem]) -> Vec<&AtlasItem> {
    let mut best = 0;
    items
        .iter()
        .filter(|item| match item.period() {
            Some(p) if p > best => {
                best = p;
                true
            }
            _ => false,
        })
        .collect()
}

/// Plain-text statistics table, one row per item.
pub fn stats_table(items: &[AtlasItem]) -> String {
    let mut out = String::from("index\ttau\tverdict\tperiod\tn\t4n+2\ttree\ttiles\n");
    for item in items {
        let verdict = match &item.verdict {
            Classification::Periodic { .. } => "periodic",
            Classification::DriftPeriodic { .. } => "drift-periodic",
            Classification::EscapingCutoff { .. } => "cutoff",
            Classification::VertexHit { .. } => "vertex-hit",
        };
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{}\t{:.15}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            item.index,
            item.tau,
            if item.error.is_some() { "error" } else { verdict },
            opt(item.period().map(|p| p.to_string())),
            opt(item.enclosed_vertices.map(|n| n.to_string())),
            opt(item.formula_holds.map(|b| b.to_string())),
            opt(item.is_tree.map(|b| b.to_string())),
            item.tiles_hit,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arnoux_yoccoz::solve_cubic_root;

    #[test]
    fn default_sequence_approaches_pi_from_below() {
        let t = TauSequence::default().values();
        assert_eq!(t.len(), 12);
        assert!(t.windows(2).all(|w| w[0] < w[1] && w[1] < std::f64::consts::PI));
    }

    #[test]
    fn early_ay_loops() {
        let a = solve_cubic_root();
        let tiling = gasket_tiling([a, a * a, 1.0 - a - a * a]).unwrap();
        let seq = TauSequence { c: 1.0, subdivisions: 8, first: 0, count: 48 };
        let items = atlas_sweep(&tiling, 4.85, &seq.values(), 5_000);
        let loops: Vec<usize> = increasing_loops(&items).iter().filter_map(|i| i.period()).collect();
        assert_eq!(&loops[..4], &[6, 18, 34, 62]);
        for item in increasing_loops(&items) {
            assert_eq!(item.formula_holds, Some(true));
            assert_eq!(item.is_tree, Some(true));
        }
    }

    #[test]
    fn tau_pi_escapes() {
        let a = solve_cubic_root();
        let tiling = gasket_tiling([a, a * a, 1.0 - a - a * a]).unwrap();
        let items = atlas_sweep(&tiling, 4.85, &[std::f64::consts::PI], 2_000);
        assert_eq!(items[0].verdict, Classification::EscapingCutoff { steps: 2_000 });
    }
}
