use std::f64::consts::PI;

use tiling_billiards::comoving::comoving_sample;
use tiling_billiards::geometry::{fold_scene, ChordState};
use tiling_billiards::trajectory::{trace, Seed};
use tiling_billiards::{Classification, TilingModel, Trajectory, TriangleAngles, TriangleCoord};
use tiling_billiards_render::{render_folded, render_pet, render_plane, write_atlas, RenderError, RenderOptions};

fn hexagon() -> (TilingModel<f64>, Trajectory<f64>) {
    let tiling = TilingModel::new(TriangleAngles::equilateral());
    let t = trace(&tiling, TriangleCoord::ORIGIN, ChordState::new(0.4, 2.9), 100).unwrap();
    (tiling, t)
}

fn polyline_points(svg: &str) -> Vec<&str> {
    let start = svg.find("<polyline points=\"").unwrap() + "<polyline points=\"".len();
    let end = start + svg[start..].find('"').unwrap();
    svg[start..end].split(' ').collect()
}

#[test]
fn plane_rendering_is_deterministic_and_closed() {
    let (tiling, t) = hexagon();
    let opts = RenderOptions { show_tree: true, ..RenderOptions::default() };
    let a = render_plane(&t, &tiling, &opts).unwrap();
    let b = render_plane(&t, &tiling, &opts).unwrap();
    assert_eq!(a, b);
    let pts = polyline_points(&a);
    assert_eq!(pts.len(), 7);
    assert_eq!(pts.first(), pts.last());
    assert_eq!(a.matches("<circle").count(), 1);
}

#[test]
fn empty_trajectory_draws_only_the_tiling() {
    let tiling = TilingModel::new(TriangleAngles::equilateral());
    let t = Trajectory {
        seed: Seed { tile: TriangleCoord::ORIGIN, state: ChordState::new(0.4, 2.9) },
        segments: vec![],
        states: vec![],
        edge_word: vec![],
        moves: vec![],
        verdict: Classification::EscapingCutoff { steps: 0 },
        revisits_checked: 0,
        max_revisit_deviation: 0.0,
    };
    let svg = render_plane(&t, &tiling, &RenderOptions::default()).unwrap();
    assert!(svg.contains("<polygon") && !svg.contains("<polyline"));
}

#[test]
fn zero_width_is_rejected() {
    let (tiling, t) = hexagon();
    let opts = RenderOptions { width_px: 0, ..RenderOptions::default() };
    assert!(matches!(render_plane(&t, &tiling, &opts), Err(RenderError::InvalidOptions(_))));
}

#[test]
fn folded_view_has_circle_chord_and_tiles() {
    let (tiling, t) = hexagon();
    let svg = render_folded(&fold_scene(&tiling, &t), &RenderOptions::default()).unwrap();
    assert_eq!(svg.matches("<circle").count(), 1);
    assert_eq!(svg.matches("<polygon").count(), t.segments.len());
    assert_eq!(svg.matches("<line").count(), t.segments.len() + 1);
}

#[test]
fn pet_diagram_labels_twelve_regions() {
    let angles = TriangleAngles::isosceles_right();
    let svg = render_pet(&angles, &RenderOptions::default(), None).unwrap();
    assert_eq!(svg.matches("<text").count(), 12);
    for label in ["CB", "BC", "AC", "CA", "BA", "AB", "D1", "D6"] {
        assert!(svg.contains(&format!(">{label}</text>")), "{label}");
    }
    let grid = comoving_sample(&angles, 20, 6).unwrap();
    let with = render_pet(&angles, &RenderOptions::default(), Some(&grid)).unwrap();
    assert_eq!(grid.label_count(), 4);
    assert!(with.matches("<rect").count() > 0);
    let fills: std::collections::BTreeSet<&str> =
        with.lines().filter(|l| l.starts_with("<rect")).map(|l| l.split("fill=\"").nth(1).unwrap().split('"').next().unwrap()).collect();
    assert_eq!(fills.len(), 4);
}

#[test]
fn atlas_writes_periodic_items_only() {
    let dir = tempfile::tempdir().unwrap();
    let a = tiling_billiards::arnoux_yoccoz::solve_cubic_root();
    let taus = [PI - PI / 2.0, PI - PI / 8.0, PI];
    let report = write_atlas([a, a * a, 1.0 - a - a * a], 4.85, &taus, 3_000, dir.path(), &RenderOptions::default()).unwrap();
    assert_eq!(report.items.len(), 3);
    assert_eq!(report.items[2].verdict, Classification::EscapingCutoff { steps: 3_000 });
    assert_eq!(report.files, ["atlas_00.svg", "atlas_01.svg"]);
    for f in &report.files {
        assert!(dir.path().join(f).exists());
    }
    let stats = std::fs::read_to_string(dir.path().join("stats.tsv")).unwrap();
    assert_eq!(stats.lines().count(), 4);
    assert!(stats.lines().nth(3).unwrap().contains("cutoff"));
}
