use tiling_billiards::bounds::{comoving_region_bound, period_bound};
use tiling_billiards::comoving::comoving_sample;
use tiling_billiards::geometry::ChordState;
use tiling_billiards::trajectory::{trace, trace_symbolic};
use tiling_billiards::{Classification, ExactAngles, Rational, TilingModel, TriangleAngles, TriangleCoord};

fn tilings() -> Vec<ExactAngles> {
    let mut out = Vec::new();
    for q in [3i64, 4, 5, 6, 7, 8, 9, 10, 12] {
        for a in 1..q {
            for b in a..q {
                let c = q - a - b;
                if c >= b {
                    out.push(TriangleAngles::from_pi_fractions([(a, q), (b, q), (c, q)]).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn periods_respect_the_rational_bound() {
    for angles in tilings() {
        let bound = period_bound(&angles).unwrap() as usize;
        for i in 0..23 {
            for j in 0..23 {
                let s = ChordState::new(Rational::new(2 * i + 1, 23), Rational::new(2 * j + 1, 23));
                let Ok(y) = trace_symbolic(&angles, s, 4 * bound) else { continue };
                match y.verdict {
                    Classification::Periodic { period } | Classification::DriftPeriodic { period, .. } => {
                        assert!(period <= bound, "{angles:?} {s:?}: {period} > {bound}")
                    }
                    Classification::VertexHit { .. } => {}
                    Classification::EscapingCutoff { .. } => panic!("rational tiling did not recur: {angles:?} {s:?}"),
                }
            }
        }
    }
}

#[test]
fn comoving_labels_respect_the_rational_bound() {
    for angles in tilings().into_iter().take(12) {
        let bound = period_bound(&angles).unwrap() as usize;
        let grid = comoving_sample(&angles, 40, bound).unwrap();
        assert!(grid.label_count() as u64 <= comoving_region_bound(&angles).unwrap(), "{angles:?}");
    }
}

#[test]
fn single_precision_traces_agree_with_double() {
    let a32 = TriangleAngles::<f32>::new(0.5, 1.0, std::f32::consts::PI - 1.5).unwrap();
    let a64 = TriangleAngles::<f64>::new(0.5, 1.0, std::f64::consts::PI - 1.5).unwrap();
    let t32 = trace(&TilingModel::new(a32), TriangleCoord::ORIGIN, ChordState::new(1.0f32, 2.5), 40).unwrap();
    let t64 = trace(&TilingModel::new(a64), TriangleCoord::ORIGIN, ChordState::new(1.0f64, 2.5), 40).unwrap();
    assert_eq!(t32.edge_word, t64.edge_word);
}
