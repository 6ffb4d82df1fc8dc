mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiling_billiards::geometry::ChordState;
use tiling_billiards::scalar::circular_distance;
use tiling_billiards::trajectory::{trace, trace_symbolic};
use tiling_billiards::{Classification, TilingModel, TriangleAngles, TriangleCoord};

fn rational_tilings() -> Vec<TriangleAngles<f64>> {
    [[(1, 3), (1, 3), (1, 3)], [(1, 4), (1, 4), (1, 2)], [(1, 6), (1, 3), (1, 2)], [(1, 7), (2, 7), (4, 7)], [(1, 5), (2, 5), (2, 5)]]
        .iter()
        .map(|p| TriangleAngles::<tiling_billiards::Rational>::from_pi_fractions(*p).unwrap().in_radians())
        .collect()
}

#[test]
fn periodic_words_survive_small_perturbations() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for angles in rational_tilings() {
        let tiling = TilingModel::new(angles);
        for _ in 0..40 {
            let s = common::random_state(&mut rng, &angles);
            let t = trace(&tiling, TriangleCoord::ORIGIN, s, 1_000).unwrap();
            let Classification::Periodic { period } = t.verdict else { continue };
            let nudged = ChordState::new(s.x + 1e-6, s.tau + 1e-6);
            if !nudged.is_allowed(&angles) || nudged.touches_vertex(&angles) {
                continue;
            }
            let margin = t.states.iter().flat_map(|st| [st.x, st.back()]).flat_map(|e| {
                angles.breakpoints().map(|b| circular_distance(e, b))
            });
            if margin.fold(f64::INFINITY, f64::min) < 1e-5 {
                continue;
            }
            let u = trace(&tiling, TriangleCoord::ORIGIN, nudged, period).unwrap();
            assert_eq!(u.edge_word, t.edge_word, "{s:?}");
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn irrational_tilings_have_no_drift_periodic_trajectories() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let a = rng.gen_range(0.2..1.0) * std::f64::consts::SQRT_2 / 2.0;
        let b = rng.gen_range(0.2..1.2f64).sqrt();
        let angles = TriangleAngles::from_unordered(a, b, std::f64::consts::PI - a - b).unwrap();
        for _ in 0..10 {
            let s = common::random_state(&mut rng, &angles);
            let y = trace_symbolic(&angles, s, 3_000).unwrap();
            assert!(!matches!(y.verdict, Classification::DriftPeriodic { .. }), "{angles:?} {s:?}");
        }
    }
}

#[test]
fn equilateral_seeds_are_all_hexagons() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let angles = TriangleAngles::equilateral();
    let tiling = TilingModel::new(angles);
    for _ in 0..300 {
        let s = common::random_state(&mut rng, &angles);
        let t = trace(&tiling, TriangleCoord::ORIGIN, s, 100).unwrap();
        assert_eq!(t.verdict, Classification::Periodic { period: 6 });
    }
}
