use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use tiling_billiards::atlas::{atlas_sweep, gasket_tiling, stats_table, AtlasItem};

use crate::options::RenderOptions;
use crate::plane::render_plane;
use crate::Result;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AtlasReport {
    pub items: Vec<AtlasItem>,
    /// Files written, in item order.
    pub files: Vec<String>,
    pub stats: String,
}

/// Traces every τ for the tiling of a gasket point and writes one SVG per
/// periodic item plus `stats.tsv`. Items render in parallel; files are
/// written one at a time afterwards.
pub fn write_atlas(
    point: [f64; 3],
    x: f64,
    taus: &[f64],
    max_crossings: usize,
    out_dir: &Path,
    options: &RenderOptions,
) -> Result<AtlasReport> {
    options.validate()?;
    let tiling = gasket_tiling(point)?;
    let items = atlas_sweep(&tiling, x, taus, max_crossings);
    let rendered: Vec<Option<(String, String)>> = items
        .par_iter()
        .map(|item| {
            let t = item.trajectory.as_ref()?;
            item.period()?;
            let svg = render_plane(t, &tiling, options).ok()?;
            Some((format!("atlas_{:02}.svg", item.index), svg))
        })
        .collect();
    fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    for (name, svg) in rendered.into_iter().flatten() {
        fs::write(out_dir.join(&name), svg)?;
        files.push(name);
    }
    let stats = stats_table(&items);
    fs::write(out_dir.join("stats.tsv"), &stats)?;
    Ok(AtlasReport { items, files, stats })
}
