mod common;

use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use tiling_billiards::geometry::ChordState;
use tiling_billiards::moves::{total_turning, MoveCounts};
use tiling_billiards::scalar::circular_distance;
use tiling_billiards::trajectory::{trace, trace_symbolic};
use tiling_billiards::{Classification, TilingModel, TriangleAngles, TriangleCoord};

fn angles() -> impl Strategy<Value = TriangleAngles<f64>> {
    (0.1..2.9f64, 0.0..1.0f64).prop_filter_map("thin triangle", |(a, t)| {
        let b = 0.1 + t * (PI - 0.2 - a);
        let c = PI - a - b;
        (c >= 0.1).then(|| TriangleAngles::from_unordered(a, b, c).unwrap())
    })
}

fn seeded() -> impl Strategy<Value = (TriangleAngles<f64>, ChordState<f64>)> {
    (angles(), 0.0..TAU, 0.0..TAU).prop_filter_map("chord misses the tile", |(a, x, tau)| {
        let s = ChordState::new(x, tau);
        (s.is_allowed(&a) && !s.touches_vertex(&a)).then_some((a, s))
    })
}

fn origin(negative: bool) -> TriangleCoord {
    if negative {
        TriangleCoord::negative(0, 0)
    } else {
        TriangleCoord::ORIGIN
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn tau_never_changes((a, s) in seeded(), negative in any::<bool>()) {
        let tiling = TilingModel::new(a);
        let t = trace(&tiling, origin(negative), s, 400).unwrap();
        for state in &t.states {
            prop_assert!(circular_distance(state.tau, s.tau) < 1e-9);
        }
    }

    #[test]
    fn every_piece_keeps_its_distance_from_the_circumcenter((a, s) in seeded()) {
        let tiling = TilingModel::new(a);
        let t = trace(&tiling, TriangleCoord::ORIGIN, s, 300).unwrap();
        let want = (s.tau / 2.0).cos().abs();
        for seg in &t.segments {
            let c = tiling.circumcenter(seg.tile);
            let d = seg.direction().normalized();
            let dist = d.cross(c - seg.start).abs();
            prop_assert!((dist - want).abs() < 1e-9, "{dist} vs {want}");
        }
    }

    #[test]
    fn revisits_match_the_first_visit((a, s) in seeded()) {
        let tiling = TilingModel::new(a);
        let t = trace(&tiling, TriangleCoord::ORIGIN, s, 2_000).unwrap();
        prop_assert!(t.max_revisit_deviation <= 1e-6);
    }

    #[test]
    fn plane_and_symbolic_traces_agree((a, s) in seeded()) {
        let tiling = TilingModel::new(a);
        let g = trace(&tiling, TriangleCoord::ORIGIN, s, 1_000).unwrap();
        let y = trace_symbolic(&a, s, 1_000).unwrap();
        prop_assert_eq!(&g.edge_word, &y.edge_word);
        prop_assert!(g.verdict.agrees_with(&y.verdict), "{:?} vs {:?}", g.verdict, y.verdict);
    }

    #[test]
    fn closure_criterion((a, s) in seeded()) {
        let y = trace_symbolic(&a, s, 2_000).unwrap();
        let counts = MoveCounts::of_moves(&y.moves);
        let turning = total_turning(&y.moves, &a);
        let whole_turns = (turning / TAU - (turning / TAU).round()).abs() < 1e-9;
        match y.verdict {
            Classification::Periodic { .. } => prop_assert!(counts.is_closed() && whole_turns),
            Classification::DriftPeriodic { .. } => prop_assert!(!counts.is_closed()),
            _ => {}
        }
    }
}
