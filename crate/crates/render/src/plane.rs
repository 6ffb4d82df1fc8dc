use tiling_billiards::enclosed::{closed_loop, enclosed_graph};
use tiling_billiards::geometry::{Orientation, Vec2};
use tiling_billiards::{Classification, TilingModel, Trajectory, TriangleCoord};

use crate::options::RenderOptions;
use crate::svg::{Bounds, Doc};
use crate::Result;

fn pt(v: Vec2<f64>) -> (f64, f64) {
    (v.x, v.y)
}

/// Points of the drawn trajectory. A periodic loop ends on its first point.
fn trajectory_points(trajectory: &Trajectory<f64>) -> Vec<(f64, f64)> {
    if let Ok(mut pts) = closed_loop(trajectory) {
        pts.push(pts[0]);
        return pts.into_iter().map(pt).collect();
    }
    let mut pts: Vec<(f64, f64)> = trajectory.segments.iter().map(|s| pt(s.start)).collect();
    if let Some(last) = trajectory.segments.last() {
        pts.push(pt(last.end));
    }
    pts
}

/// Tiles whose circumcenter lies in `bounds`, in a fixed order.
fn tiles_in(tiling: &TilingModel<f64>, bounds: Bounds) -> Vec<TriangleCoord> {
    let corners = [
        Vec2::new(bounds.min_x, bounds.min_y),
        Vec2::new(bounds.max_x, bounds.min_y),
        Vec2::new(bounds.min_x, bounds.max_y),
        Vec2::new(bounds.max_x, bounds.max_y),
    ];
    let coords: Vec<(f64, f64)> = corners.iter().map(|c| tiling.lattice_coordinates(*c)).collect();
    let lo = |f: fn(&(f64, f64)) -> f64| coords.iter().map(f).fold(f64::INFINITY, f64::min).floor() as i64 - 1;
    let hi = |f: fn(&(f64, f64)) -> f64| coords.iter().map(f).fold(f64::NEG_INFINITY, f64::max).ceil() as i64 + 1;
    let mut out = Vec::new();
    for m in lo(|c| c.0)..=hi(|c| c.0) {
        for n in lo(|c| c.1)..=hi(|c| c.1) {
            for tile in [TriangleCoord::positive(m, n), TriangleCoord::negative(m, n)] {
                let c = tiling.circumcenter(tile);
                if c.x >= bounds.min_x && c.x <= bounds.max_x && c.y >= bounds.min_y && c.y <= bounds.max_y {
                    out.push(tile);
                }
            }
        }
    }
    out
}

/// The trajectory over the tiling near it, with the enclosed tree of a
/// periodic trajectory when `show_tree` is set.
pub fn render_plane(trajectory: &Trajectory<f64>, tiling: &TilingModel<f64>, options: &RenderOptions) -> Result<String> {
    options.validate()?;
    let points = trajectory_points(trajectory);
    let mut bounds = Bounds::empty();
    for &(x, y) in &points {
        bounds.add(x, y);
    }
    if bounds.is_empty() {
        for v in tiling.vertices(trajectory.seed.tile) {
            bounds.add(v.x, v.y);
        }
    }
    let bounds = bounds.padded(1.0);
    let palette = &options.palette;
    let w = options.stroke_width;
    let mut doc = Doc::new();

    if options.show_tiling {
        for tile in tiles_in(tiling, bounds) {
            let fill = match tile.orientation {
                Orientation::Positive => &palette.positive,
                Orientation::Negative => &palette.negative,
            };
            let v = tiling.vertices(tile).map(pt);
            doc.polygon(&v, fill, "#ffffff", w / 2.0);
        }
    }
    if options.show_tree && matches!(trajectory.verdict, Classification::Periodic { .. }) {
        let graph = enclosed_graph(trajectory, tiling)?;
        for e in &graph.edges {
            let (a, b) = (tiling.lattice_point(e.0 .0, e.0 .1), tiling.lattice_point(e.1 .0, e.1 .1));
            doc.line(pt(a), pt(b), &palette.tree, 3.0 * w);
        }
        for &(i, j) in &graph.vertices {
            doc.circle(pt(tiling.lattice_point(i, j)), 2.0 * w, &palette.tree, "none", 0.0);
        }
    }
    if points.len() >= 2 {
        doc.polyline(&points, &palette.trajectory, w);
    }
    Ok(doc.finish(bounds, options))
}
