use std::collections::BTreeMap;
use std::f64::consts::TAU;

use tiling_billiards::comoving::{CellLabel, ComovingGrid};
use tiling_billiards::pet::{pet_regions, RegionLabel};
use tiling_billiards::TriangleAngles;

use crate::options::RenderOptions;
use crate::svg::{Bounds, Doc};
use crate::Result;

const MOVE_COLORS: [(&str, &str); 6] = [
    ("CB", "#9ecae1"),
    ("BC", "#3182bd"),
    ("AC", "#a1d99b"),
    ("CA", "#31a354"),
    ("BA", "#fdae6b"),
    ("AB", "#e6550d"),
];
const DISALLOWED: &str = "#fb6a4a";
const OVERLAY: [&str; 8] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"];

fn fill_of(label: &RegionLabel) -> &'static str {
    match label {
        RegionLabel::Move(pair) => {
            let name = pair.to_string();
            MOVE_COLORS.iter().find(|(n, _)| *n == name).map_or("#cccccc", |(_, c)| c)
        }
        RegionLabel::Disallowed(_) => DISALLOWED,
    }
}

/// The `(X, τ)` square with its twelve regions. With a comoving grid, each
/// labeled grid point is drawn as a translucent cell colored by its word.
pub fn render_pet(angles: &TriangleAngles<f64>, options: &RenderOptions, overlay: Option<&ComovingGrid>) -> Result<String> {
    options.validate()?;
    let w = options.stroke_width;
    let mut doc = Doc::new();
    let regions = pet_regions(angles);
    for r in &regions {
        doc.polygon(&r.polygon, fill_of(&r.label), "#252525", w);
    }
    if let Some(grid) = overlay {
        let colors: BTreeMap<&str, &str> =
            grid.classes.keys().enumerate().map(|(k, word)| (word.as_str(), OVERLAY[k % OVERLAY.len()])).collect();
        let cell = TAU / grid.grid_n as f64;
        for p in &grid.points {
            if let CellLabel::Word(word) = &p.label {
                let x0 = (p.x / cell).floor() * cell;
                let t0 = (p.tau / cell).floor() * cell;
                doc.rect((x0, t0), cell, cell, colors[word.as_str()], 0.55);
            }
        }
    }
    for r in &regions {
        let n = r.polygon.len() as f64;
        let (cx, cy) = r.polygon.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / n, b + y / n));
        let text = match r.label {
            RegionLabel::Move(pair) => pair.to_string(),
            RegionLabel::Disallowed(k) => format!("D{k}"),
        };
        doc.text((cx, cy), 0.25, &text);
    }
    doc.polygon(&[(0.0, 0.0), (TAU, 0.0), (TAU, TAU), (0.0, TAU)], "none", "#000000", 2.0 * w);
    let bounds = Bounds { min_x: 0.0, min_y: 0.0, max_x: TAU, max_y: TAU }.padded(0.2);
    Ok(doc.finish(bounds, options))
}
