//! JSON form of a traced trajectory.

use serde::{Deserialize, Serialize};

use crate::angles::{word_to_string, TriangleAngles};
use crate::enclosed::{enclosed_graph, EnclosedGraph};
use crate::error::{Error, Result};
use crate::geometry::{ChordState, EdgeKey, TilingModel, TriangleCoord};
use crate::trajectory::{trace, Classification, Trajectory};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnglesJson {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedJson {
    pub tile: TriangleCoord,
    pub x: f64,
    pub tau: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
    pub tile: TriangleCoord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnclosedJson {
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<EdgeKey>,
    pub is_tree: bool,
    pub is_path: bool,
}

impl From<&EnclosedGraph> for EnclosedJson {
    fn from(g: &EnclosedGraph) -> Self {
        Self { vertices: g.vertices.clone(), edges: g.edges.clone(), is_tree: g.is_tree, is_path: g.is_path }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrajectoryExport {
    pub angles: AnglesJson,
    pub seed: SeedJson,
    pub max_crossings: usize,
    pub verdict: Classification,
    pub edge_word: String,
    pub segments: Vec<SegmentJson>,
    pub moves: Vec<String>,
    pub enclosed: Option<EnclosedJson>,
}

impl TrajectoryExport {
    /// Builds the export; the enclosed graph is included for periodic
    /// trajectories only.
    pub fn new(tiling: &TilingModel<f64>, trajectory: &Trajectory<f64>, max_crossings: usize) -> Result<Self> {
        let a = tiling.angles();
        let enclosed = match trajectory.verdict {
            Classification::Periodic { .. } => Some(EnclosedJson::from(&enclosed_graph(trajectory, tiling)?)),
            _ => None,
        };
        Ok(Self {
            angles: AnglesJson { alpha: a.alpha(), beta: a.beta(), gamma: a.gamma() },
            seed: SeedJson { tile: trajectory.seed.tile, x: trajectory.seed.state.x, tau: trajectory.seed.state.tau },
            max_crossings,
            verdict: trajectory.verdict,
            edge_word: word_to_string(&trajectory.edge_word),
            segments: trajectory
                .segments
                .iter()
                .map(|s| SegmentJson { x1: s.start.x, y1: s.start.y, x2: s.end.x, y2: s.end.y, tile: s.tile })
                .collect(),
            moves: trajectory.moves.iter().map(ToString::to_string).collect(),
            enclosed,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export is plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-traces the trajectory from the stored seed.
    pub fn retrace(&self) -> Result<(TilingModel<f64>, Trajectory<f64>)> {
        let a = self.angles;
        let tiling = TilingModel::new(TriangleAngles::new(a.alpha, a.beta, a.gamma)?);
        let t = trace(&tiling, self.seed.tile, ChordState::new(self.seed.x, self.seed.tau), self.max_crossings)?;
        Ok((tiling, t))
    }
}
