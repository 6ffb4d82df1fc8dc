use tiling_billiards::geometry::FoldedScene;

use crate::options::RenderOptions;
use crate::svg::{Bounds, Doc};
use crate::Result;

/// The folded view: unit circle, the common chord and every folded tile.
pub fn render_folded(scene: &FoldedScene<f64>, options: &RenderOptions) -> Result<String> {
    options.validate()?;
    let p = &options.palette;
    let w = options.stroke_width;
    let mut doc = Doc::new();
    doc.circle((0.0, 0.0), 1.0, "none", "#525252", w);
    for tile in &scene.tiles {
        let fill = if tile.rotation { &p.positive } else { &p.negative };
        let v = tile.vertices.map(|v| (v.x, v.y));
        doc.polygon(&v, fill, "#525252", w / 2.0);
    }
    let (back, front) = scene.chord;
    doc.line((back.x, back.y), (front.x, front.y), "#969696", w / 2.0);
    for (a, b) in &scene.segments {
        doc.line((a.x, a.y), (b.x, b.y), &p.trajectory, w);
    }
    let bounds = Bounds { min_x: -1.1, min_y: -1.1, max_x: 1.1, max_y: 1.1 };
    Ok(doc.finish(bounds, options))
}
