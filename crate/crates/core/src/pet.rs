//! The polygon exchange on the `(X, τ)` square.
//!
//! Two edge crossings move a state horizontally by a shift that depends only
//! on which of six regions it lies in; the six remaining triangles of the
//! square are states whose chord misses the triangle, taken as fixed points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angles::{Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::ChordState;
use crate::iet::IetSpec;
use crate::moves::{EdgePair, Move};
use crate::scalar::{abs, wrap, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "camelCase")]
pub enum RegionLabel {
    Move(EdgePair),
    /// Disallowed zone, numbered 1 to 6.
    Disallowed(u8),
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionLabel::Move(p) => write!(f, "{p}"),
            RegionLabel::Disallowed(k) => write!(f, "disallowed-{k}"),
        }
    }
}

/// A convex polygon of the square with its horizontal shift.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PetRegion<S> {
    pub label: RegionLabel,
    /// Vertices `(X, τ)` in counterclockwise order.
    pub polygon: Vec<(S, S)>,
    pub shift: Option<S>,
}

impl<S: Scalar> PetRegion<S> {
    /// Shoelace area, in squared radians.
    pub fn area(&self) -> f64 {
        let pts: Vec<(f64, f64)> = self.polygon.iter().map(|(x, t)| (x.radians(), t.radians())).collect();
        let n = pts.len();
        let twice: f64 = (0..n)
            .map(|i| {
                let (a, b) = (pts[i], pts[(i + 1) % n]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum();
        twice.abs() / 2.0
    }

    /// Closed X interval cut from the polygon by the line at height `tau`.
    pub fn slice(&self, tau: S) -> Option<(S, S)> {
        let n = self.polygon.len();
        let mut lo: Option<S> = None;
        let mut hi: Option<S> = None;
        let mut push = |x: S| {
            lo = Some(match lo {
                Some(v) if v <= x => v,
                _ => x,
            });
            hi = Some(match hi {
                Some(v) if v >= x => v,
                _ => x,
            });
        };
        for i in 0..n {
            let (p, q) = (self.polygon[i], self.polygon[(i + 1) % n]);
            if p.1 == tau {
                push(p.0);
            }
            let crosses = (p.1 < tau && tau < q.1) || (q.1 < tau && tau < p.1);
            if crosses {
                push(p.0 + (tau - p.1) * (q.0 - p.0) / (q.1 - p.1));
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) if l < h => Some((l, h)),
            _ => None,
        }
    }
}

/// Horizontal shift of each move region.
pub fn region_shift<S: Scalar>(angles: &TriangleAngles<S>, pair: EdgePair) -> S {
    let two = S::int(2);
    let (a, b, g) = (two * angles.alpha(), two * angles.beta(), two * angles.gamma());
    match (pair.0, pair.1) {
        (Side::C, Side::B) => a,
        (Side::C, Side::A) => -b,
        (Side::A, Side::C) => b,
        (Side::A, Side::B) => -g,
        (Side::B, Side::A) => g,
        (Side::B, Side::C) => -a,
        _ => S::zero(),
    }
}

/// The six move regions and six disallowed zones.
pub fn pet_regions<S: Scalar>(angles: &TriangleAngles<S>) -> Vec<PetRegion<S>> {
    let two = S::int(2);
    let (a, b, g) = (two * angles.alpha(), two * angles.beta(), two * angles.gamma());
    let t = S::full_turn();
    let z = S::zero();
    let pair = |s: &str| RegionLabel::Move(EdgePair::parse(s).expect("static pair"));
    let region = |label: RegionLabel, polygon: Vec<(S, S)>| {
        let shift = match label {
            RegionLabel::Move(p) => Some(region_shift(angles, p)),
            RegionLabel::Disallowed(_) => None,
        };
        PetRegion { label, polygon, shift }
    };
    let ga = g + a;
    vec![
        region(pair("CB"), vec![(z, a), (g, g + a), (g, t), (z, a + b)]),
        region(pair("CA"), vec![(z, z), (g, g), (g, g + a), (z, a)]),
        region(pair("AC"), vec![(g, b), (ga, a + b), (ga, t), (g, g + b)]),
        region(pair("AB"), vec![(g, z), (ga, a), (ga, a + b), (g, b)]),
        region(pair("BA"), vec![(ga, g), (t, t - a), (t, t), (ga, ga)]),
        region(pair("BC"), vec![(ga, z), (t, b), (t, t - a), (ga, g)]),
        region(RegionLabel::Disallowed(1), vec![(z, z), (g, z), (g, g)]),
        region(RegionLabel::Disallowed(2), vec![(g, z), (ga, z), (ga, a)]),
        region(RegionLabel::Disallowed(3), vec![(ga, z), (t, z), (t, b)]),
        region(RegionLabel::Disallowed(4), vec![(z, a + b), (g, t), (z, t)]),
        region(RegionLabel::Disallowed(5), vec![(g, g + b), (ga, t), (g, t)]),
        region(RegionLabel::Disallowed(6), vec![(ga, ga), (t, t), (ga, t)]),
    ]
}

/// The region containing `state`, decided by the defining inequalities.
/// Fails with `BoundaryHit` within the vertex tolerance of any boundary.
pub fn classify<S: Scalar>(angles: &TriangleAngles<S>, state: ChordState<S>) -> Result<RegionLabel> {
    let eps = S::vertex_tolerance();
    let two = S::int(2);
    let (a, b, g) = (two * angles.alpha(), two * angles.beta(), two * angles.gamma());
    let t = S::full_turn();
    let (x, tau) = (wrap(state.x), wrap(state.tau));
    let near = |u: S, v: S| abs(u - v) <= eps;
    for bp in angles.breakpoints().into_iter().chain([t]) {
        if near(x, bp) {
            return Err(Error::BoundaryHit);
        }
    }
    if near(tau, S::zero()) || near(tau, t) {
        return Err(Error::BoundaryHit);
    }
    // Thresholds in τ for the column of x, ascending, with the label of the
    // band above each threshold.
    let bands: [(S, RegionLabel); 3] = match angles.side_of(x) {
        Side::C => [
            (x, RegionLabel::Move(EdgePair(Side::C, Side::A))),
            (x + a, RegionLabel::Move(EdgePair(Side::C, Side::B))),
            (x + a + b, RegionLabel::Disallowed(4)),
        ],
        Side::A => [
            (x - g, RegionLabel::Move(EdgePair(Side::A, Side::B))),
            (x - g + b, RegionLabel::Move(EdgePair(Side::A, Side::C))),
            (x + b, RegionLabel::Disallowed(5)),
        ],
        Side::B => [
            (x - a - g, RegionLabel::Move(EdgePair(Side::B, Side::C))),
            (x - a, RegionLabel::Move(EdgePair(Side::B, Side::A))),
            (x, RegionLabel::Disallowed(6)),
        ],
    };
    let bottom = match angles.side_of(x) {
        Side::C => RegionLabel::Disallowed(1),
        Side::A => RegionLabel::Disallowed(2),
        Side::B => RegionLabel::Disallowed(3),
    };
    let mut label = bottom;
    for (threshold, above) in bands {
        if near(tau, threshold) {
            return Err(Error::BoundaryHit);
        }
        if tau > threshold {
            label = above;
        }
    }
    Ok(label)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum PetOutcome<S> {
    Moved { state: ChordState<S>, pair: EdgePair, mv: Move },
    /// Disallowed zone; the state does not move.
    Fixed { zone: u8 },
}

/// One step of the polygon exchange: two edge crossings at once.
pub fn pet_step<S: Scalar>(angles: &TriangleAngles<S>, state: ChordState<S>) -> Result<PetOutcome<S>> {
    match classify(angles, state)? {
        RegionLabel::Disallowed(zone) => Ok(PetOutcome::Fixed { zone }),
        RegionLabel::Move(pair) => {
            let shift = region_shift(angles, pair);
            Ok(PetOutcome::Moved {
                state: ChordState::new(state.x + shift, state.tau),
                pair,
                mv: pair.to_move()?,
            })
        }
    }
}

/// The horizontal slice at height `tau` as a circle exchange, built by
/// intersecting the regions with the line.
pub fn slice_iet<S: Scalar>(angles: &TriangleAngles<S>, tau: S) -> IetSpec<S> {
    let mut pieces: Vec<(S, S, S)> = pet_regions(angles)
        .iter()
        .filter_map(|r| {
            let (l, h) = r.slice(tau)?;
            Some((l, h, r.shift.map(wrap).unwrap_or_else(S::zero)))
        })
        .collect();
    pieces.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut breakpoints = vec![S::zero()];
    let mut shifts: Vec<S> = Vec::new();
    for (_, right, shift) in pieces {
        if shift.is_zero() && shifts.last().is_some_and(|s| s.is_zero()) {
            *breakpoints.last_mut().unwrap() = right;
            continue;
        }
        shifts.push(shift);
        breakpoints.push(right);
    }
    let flips = vec![false; shifts.len()];
    IetSpec { circumference: S::full_turn(), breakpoints, flips, shifts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use std::f64::consts::PI;

    #[test]
    fn equilateral_cb_region() {
        let t = TriangleAngles::<Rational>::equilateral();
        let r = |n, d| Rational::new(n, d);
        let regions = pet_regions(&t);
        let cb = regions.iter().find(|reg| reg.label.to_string() == "CB").unwrap();
        assert_eq!(cb.slice(r(1, 1)), Some((r(0, 1), r(1, 3))));
        assert_eq!(classify(&t, ChordState::new(r(1, 6), r(1, 1))).unwrap().to_string(), "CB");
        // τ between X + 2π/3 and X + 4π/3
        assert_eq!(classify(&t, ChordState::new(r(1, 3) - r(1, 100), r(19, 10))).unwrap().to_string(), "disallowed-4");
    }

    #[test]
    fn areas_fill_the_square() {
        let t = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        let total: f64 = pet_regions(&t).iter().map(PetRegion::area).sum();
        assert!((total - 4.0 * PI * PI).abs() < 1e-9);
    }

    #[test]
    fn step_from_the_worked_example() {
        let t = TriangleAngles::<f64>::equilateral();
        match pet_step(&t, ChordState::new(PI / 6.0, PI)).unwrap() {
            PetOutcome::Moved { state, pair, mv } => {
                assert!((state.x - 5.0 * PI / 6.0).abs() < 1e-12);
                assert_eq!(pair.to_string(), "CB");
                assert_eq!(mv.to_string(), "alpha");
            }
            other => panic!("unexpected {other:?}"),
        }
        let fixed = pet_step(&t, ChordState::new(PI / 6.0, PI / 100.0)).unwrap();
        assert_eq!(fixed, PetOutcome::Fixed { zone: 1 });
    }

    #[test]
    fn obtuse_central_band_has_no_gamma_regions() {
        let t = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        let tau = 0.5 * ((2.0 * (0.3 + 0.5)) + 2.0 * (PI - 0.8));
        for r in pet_regions(&t) {
            if let RegionLabel::Move(p) = r.label {
                if matches!(p.to_move().unwrap().kind, crate::moves::MoveKind::Gamma) {
                    assert!(r.slice(tau).is_none(), "{p} meets the band");
                }
            }
        }
    }

    #[test]
    fn equilateral_slices() {
        let t = TriangleAngles::<Rational>::equilateral();
        assert_eq!(slice_iet(&t, Rational::new(1, 3)).active_count(), 3);
        assert_eq!(slice_iet(&t, Rational::new(5, 3)).active_count(), 3);
        assert_eq!(slice_iet(&t, Rational::new(1, 1)).active_count(), 6);
    }
}
