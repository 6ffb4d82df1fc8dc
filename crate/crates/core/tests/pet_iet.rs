mod common;

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiling_billiards::geometry::ChordState;
use tiling_billiards::iet::{iet_step, squared_iet};
use tiling_billiards::moves::EdgePair;
use tiling_billiards::pet::{classify, pet_regions, pet_step, slice_iet, PetOutcome, RegionLabel};
use tiling_billiards::scalar::circular_distance;
use tiling_billiards::{Rational, TriangleAngles};

/// Two crossings of the edge map, with the sides crossed.
fn two_crossings<S: tiling_billiards::Scalar>(
    angles: &TriangleAngles<S>,
    s: ChordState<S>,
) -> Option<(ChordState<S>, EdgePair)> {
    let (mid, first) = iet_step(angles, s).ok()?;
    let (end, second) = iet_step(angles, mid).ok()?;
    Some((end, EdgePair(first, second)))
}

#[test]
fn polygon_exchange_is_the_square_of_the_edge_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    let mut fixed = 0;
    let mut worst: f64 = 0.0;
    for k in 0..100_000 {
        let tiling_seed = k / 1000;
        let mut tiling_rng = ChaCha8Rng::seed_from_u64(tiling_seed);
        let angles = if tiling_seed % 2 == 0 {
            common::random_angles(&mut tiling_rng)
        } else {
            common::random_obtuse(&mut tiling_rng)
        };
        let s = ChordState::new(rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU));
        let Ok(outcome) = pet_step(&angles, s) else { continue };
        match outcome {
            PetOutcome::Fixed { .. } => {
                assert!(!s.is_allowed(&angles));
                fixed += 1;
            }
            PetOutcome::Moved { state, pair, .. } => {
                let Some((end, crossed)) = two_crossings(&angles, s) else { continue };
                assert_eq!(pair, crossed, "region label at {s:?}");
                let dev = circular_distance(state.x, end.x);
                worst = worst.max(dev);
                compared += 1;
            }
        }
    }
    assert!(worst < 1e-12, "worst deviation {worst}");
    assert!(compared + fixed > 99_000, "only {compared} + {fixed} samples decided");
}

#[test]
fn exact_mode_agrees_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tilings = [
        TriangleAngles::<Rational>::equilateral(),
        TriangleAngles::isosceles_right(),
        TriangleAngles::thirty_sixty_ninety(),
        TriangleAngles::from_pi_fractions([(1, 7), (2, 7), (4, 7)]).unwrap(),
        TriangleAngles::from_pi_fractions([(1, 12), (1, 4), (2, 3)]).unwrap(),
    ];
    for angles in &tilings {
        for _ in 0..2_000 {
            let q = |r: &mut ChaCha8Rng| Rational::new(r.gen_range(0..2 * 997), 997);
            let s = ChordState::new(q(&mut rng), q(&mut rng));
            let Ok(PetOutcome::Moved { state, pair, .. }) = pet_step(angles, s) else { continue };
            let (end, crossed) = two_crossings(angles, s).expect("interior points cross twice");
            assert_eq!(pair, crossed);
            assert_eq!(state, end);
        }
    }
}

#[test]
fn regions_partition_the_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let angles = common::random_angles(&mut rng);
        let regions = pet_regions(&angles);
        let total: f64 = regions.iter().map(|r| r.area()).sum();
        assert!((total - 4.0 * PI * PI).abs() < 1e-9);

        for _ in 0..500 {
            let (x, tau) = (rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU));
            let Ok(label) = classify(&angles, ChordState::new(x, tau)) else { continue };
            let containing: Vec<RegionLabel> =
                regions.iter().filter(|r| inside(&r.polygon, (x, tau))).map(|r| r.label).collect();
            assert_eq!(containing, vec![label]);
        }
    }
}

fn inside(poly: &[(f64, f64)], p: (f64, f64)) -> bool {
    let n = poly.len();
    let mut wn = 0i32;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let left = (b.0 - a.0) * (p.1 - a.1) - (p.0 - a.0) * (b.1 - a.1);
        if a.1 <= p.1 {
            if b.1 > p.1 && left > 0.0 {
                wn += 1;
            }
        } else if b.1 <= p.1 && left < 0.0 {
            wn -= 1;
        }
    }
    wn != 0
}

#[test]
fn slices_match_the_composed_exchange() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let angles = common::random_angles(&mut rng);
        let tau = rng.gen_range(0.0..TAU);
        let (sliced, squared) = (slice_iet(&angles, tau), squared_iet(&angles, tau));
        for _ in 0..200 {
            let x = rng.gen_range(0.0..TAU);
            let (Ok(a), Ok(b)) = (sliced.apply(x), squared.apply(x)) else { continue };
            assert!(circular_distance(a, b) < 1e-9, "tau {tau} x {x}: {a} vs {b}");
        }
    }
}
