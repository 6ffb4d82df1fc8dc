//! Circle exchange transformations, possibly with flips.
//!
//! A piece `[left, right)` either rotates (`x ↦ x + shift`) or flips
//! (`x ↦ shift − x`), with results reduced mod the circumference.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::angles::{Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::ChordState;
use crate::scalar::{abs, circular_distance, wrap, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IetSpec<S> {
    pub circumference: S,
    pub breakpoints: Vec<S>,
    pub flips: Vec<bool>,
    pub shifts: Vec<S>,
}

/// Affine piece `x ↦ shift ± x`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct PieceMap<S> {
    flip: bool,
    shift: S,
}

impl<S: Scalar> PieceMap<S> {
    fn eval(self, x: S, c: S) -> S {
        wrap_to(if self.flip { self.shift - x } else { x + self.shift }, c)
    }

    /// `second ∘ self`.
    fn then(self, second: PieceMap<S>, c: S) -> PieceMap<S> {
        let (f1, s1, f2, s2) = (self.flip, self.shift, second.flip, second.shift);
        let (flip, shift) = match (f1, f2) {
            (false, false) => (false, s1 + s2),
            (true, false) => (true, s1 + s2),
            (false, true) => (true, s2 - s1),
            (true, true) => (false, s2 - s1),
        };
        PieceMap { flip, shift: wrap_to(shift, c) }
    }

    /// The unique `x` with `eval(x) ≡ y`.
    fn preimage(self, y: S, c: S) -> S {
        wrap_to(if self.flip { self.shift - y } else { y - self.shift }, c)
    }
}

fn wrap_to<S: Scalar>(x: S, c: S) -> S {
    let mut r = x % c;
    if r < S::zero() {
        r = r + c;
    }
    if r >= c {
        r = r - c;
    }
    r
}

impl<S: Scalar> IetSpec<S> {
    /// Validates the piece data, including that the images tile the circle.
    pub fn new(circumference: S, breakpoints: Vec<S>, flips: Vec<bool>, shifts: Vec<S>) -> Result<Self> {
        let spec = Self { circumference, breakpoints, flips, shifts };
        spec.validate()?;
        Ok(spec)
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    fn map(&self, i: usize) -> PieceMap<S> {
        PieceMap { flip: self.flips[i], shift: self.shifts[i] }
    }

    /// `[left, right)` of piece `i`.
    pub fn interval(&self, i: usize) -> (S, S) {
        (self.breakpoints[i], self.breakpoints[i + 1])
    }

    /// Whether piece `i` is the identity.
    pub fn is_fixed(&self, i: usize) -> bool {
        !self.flips[i] && self.shifts[i].is_zero()
    }

    /// Number of pieces that actually move points.
    pub fn active_count(&self) -> usize {
        (0..self.len()).filter(|&i| !self.is_fixed(i)).count()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.flips.len();
        if n == 0 || self.shifts.len() != n || self.breakpoints.len() != n + 1 {
            return Err(Error::InvalidIet("inconsistent piece counts".into()));
        }
        if !self.breakpoints[0].is_zero() || self.breakpoints[n] != self.circumference {
            return Err(Error::InvalidIet("breakpoints must run from 0 to the circumference".into()));
        }
        if self.breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidIet("breakpoints must be strictly ascending".into()));
        }
        // Image arcs, cut at 0, must cover the circle without overlap.
        let c = self.circumference;
        let mut arcs = Vec::with_capacity(2 * n);
        for i in 0..n {
            let (l, r) = self.interval(i);
            let m = self.map(i);
            let len = r - l;
            let start = if m.flip { wrap_to(m.shift - r, c) } else { wrap_to(l + m.shift, c) };
            let end = start + len;
            if end > c {
                arcs.push((start, c));
                arcs.push((S::zero(), end - c));
            } else {
                arcs.push((start, end));
            }
        }
        arcs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
        let tol = S::angle_sum_tolerance() * S::int(4 * n as i64);
        let mut cursor = S::zero();
        for (start, end) in arcs {
            if abs(start - cursor) > tol {
                return Err(Error::InvalidIet(format!(
                    "images do not tile the circle near {}",
                    start.radians()
                )));
            }
            cursor = end;
        }
        if abs(cursor - c) > tol {
            return Err(Error::InvalidIet("images do not cover the circle".into()));
        }
        Ok(())
    }

    /// Index of the piece containing `x`, with half-open pieces.
    pub fn piece_of(&self, x: S) -> usize {
        let x = wrap_to(x, self.circumference);
        let pos = self.breakpoints[1..].partition_point(|b| *b <= x);
        pos.min(self.len() - 1)
    }

    /// Applies the map without any breakpoint guard.
    pub fn apply_unchecked(&self, x: S) -> S {
        let x = wrap_to(x, self.circumference);
        self.map(self.piece_of(x)).eval(x, self.circumference)
    }

    /// Breakpoints across which the map is discontinuous.
    pub fn discontinuities(&self) -> Vec<S> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            let prev = if i == 0 { n - 1 } else { i - 1 };
            let (a, b) = (self.map(prev), self.map(i));
            let continuous = a.flip == b.flip && circular_distance(a.shift, b.shift) <= S::angle_sum_tolerance();
            if !continuous {
                out.push(if i == 0 { S::zero() } else { self.breakpoints[i] });
            }
        }
        out
    }

    /// Applies the map, failing within the vertex tolerance of a discontinuity.
    pub fn apply(&self, x: S) -> Result<S> {
        let eps = S::vertex_tolerance();
        for b in self.discontinuities() {
            if circular_distance(x, b) <= eps {
                return Err(Error::BreakpointHit);
            }
        }
        Ok(self.apply_unchecked(x))
    }

    /// `second ∘ self`, as a piecewise map with exact breakpoints.
    pub fn compose(&self, second: &IetSpec<S>) -> IetSpec<S> {
        let c = self.circumference;
        let tol = S::angle_sum_tolerance();
        let mut cuts: Vec<S> = self.breakpoints.clone();
        for i in 0..self.len() {
            let (l, r) = self.interval(i);
            let m = self.map(i);
            for &b in &second.breakpoints {
                let x = m.preimage(b, c);
                if x > l && x < r {
                    cuts.push(x);
                }
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        cuts.dedup_by(|b, a| abs(*b - *a) <= tol);
        if let Some(last) = cuts.last_mut() {
            *last = c;
        }

        let two = S::int(2);
        let mut breakpoints = vec![S::zero()];
        let mut flips = Vec::new();
        let mut shifts = Vec::new();
        for w in cuts.windows(2) {
            let mid = (w[0] + w[1]) / two;
            let first = self.map(self.piece_of(mid));
            let image = first.eval(mid, c);
            let mut composite = first.then(second.map(second.piece_of(image)), c);
            if !composite.flip && circular_distance(composite.shift, S::zero()) <= tol {
                composite.shift = S::zero();
            }
            let prev_fixed = flips.last() == Some(&false) && shifts.last().is_some_and(|s: &S| s.is_zero());
            let fixed = !composite.flip && composite.shift.is_zero();
            if fixed && prev_fixed {
                *breakpoints.last_mut().unwrap() = w[1];
                continue;
            }
            flips.push(composite.flip);
            shifts.push(composite.shift);
            breakpoints.push(w[1]);
        }
        IetSpec { circumference: c, breakpoints, flips, shifts }
    }

    /// Plain-text form: one line per piece, `left right flip shift` in
    /// radians with 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.len() {
            let (l, r) = self.interval(i);
            let _ = writeln!(
                out,
                "{:.16e} {:.16e} {} {:.16e}",
                l.radians(),
                r.radians(),
                u8::from(self.flips[i]),
                self.shifts[i].radians()
            );
        }
        out
    }

    pub fn in_radians(&self) -> IetSpec<f64> {
        IetSpec {
            circumference: self.circumference.radians(),
            breakpoints: self.breakpoints.iter().map(|b| b.radians()).collect(),
            flips: self.flips.clone(),
            shifts: self.shifts.iter().map(|s| s.radians()).collect(),
        }
    }
}

impl IetSpec<f64> {
    /// Parses the output of [`IetSpec::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut breakpoints = vec![0.0];
        let mut flips = Vec::new();
        let mut shifts = Vec::new();
        for (k, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Parse(format!("line {}: expected 4 fields", k + 1)));
            }
            let num = |s: &str| s.parse::<f64>().map_err(|_| Error::Parse(format!("line {}: bad number {s:?}", k + 1)));
            let left = num(fields[0])?;
            if k == 0 {
                breakpoints[0] = left;
            }
            breakpoints.push(num(fields[1])?);
            flips.push(match fields[2] {
                "0" | "false" => false,
                "1" | "true" => true,
                other => return Err(Error::Parse(format!("line {}: bad flip {other:?}", k + 1))),
            });
            shifts.push(num(fields[3])?);
        }
        let circumference = *breakpoints.last().unwrap_or(&0.0);
        IetSpec::new(circumference, breakpoints, flips, shifts)
    }

    /// Rigid rotation by `shift`.
    pub fn rotation(circumference: f64, shift: f64) -> Self {
        IetSpec {
            circumference,
            breakpoints: vec![0.0, circumference],
            flips: vec![false],
            shifts: vec![wrap_to(shift, circumference)],
        }
    }
}

/// The orientation-reversing 3-interval exchange of one edge crossing.
///
/// `[0, 2γ)`, `[2γ, 2γ+2α)` and `[2γ+2α, 2π)` are flipped with shifts
/// `τ+2γ`, `τ−2β+2γ` and `τ−2β`.
pub fn tiling_iet<S: Scalar>(angles: &TriangleAngles<S>, tau: S) -> IetSpec<S> {
    let two = S::int(2);
    let (a, b, g) = (two * angles.alpha(), two * angles.beta(), two * angles.gamma());
    let turn = S::full_turn();
    IetSpec {
        circumference: turn,
        breakpoints: vec![S::zero(), g, g + a, turn],
        flips: vec![true; 3],
        shifts: vec![wrap(tau + g), wrap(tau - b + g), wrap(tau - b)],
    }
}

/// The orientation-preserving square of [`tiling_iet`]. Disallowed zones
/// come out as fixed pieces.
pub fn squared_iet<S: Scalar>(angles: &TriangleAngles<S>, tau: S) -> IetSpec<S> {
    let t = tiling_iet(angles, tau);
    t.compose(&t)
}

/// One edge crossing: the new state and the side crossed.
pub fn iet_step<S: Scalar>(angles: &TriangleAngles<S>, state: ChordState<S>) -> Result<(ChordState<S>, Side)> {
    if state.touches_vertex(angles) {
        return Err(Error::VertexHit { step: 0 });
    }
    if !state.is_allowed(angles) {
        return Err(Error::DisallowedState);
    }
    let side = state.exit_side(angles);
    let two = S::int(2);
    let (b, g) = (two * angles.beta(), two * angles.gamma());
    let (tau, x) = (state.tau, state.x);
    let next = match side {
        Side::C => tau + g - x,
        Side::A => tau - b + g - x,
        Side::B => tau - b - x,
    };
    Ok((ChordState::new(next, tau), side))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum IetVerdict {
    PeriodicIet { period: usize },
    Aperiodic { cutoff: usize },
    VertexHit { step: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitRecord<S> {
    pub states: Vec<S>,
    /// Sides crossed, only filled for tiling orbits.
    pub sides: Vec<Side>,
    pub verdict: IetVerdict,
}

fn returned<S: Scalar>(x: S, x0: S, c: S) -> bool {
    let d = wrap_to(x - x0, c);
    let d = if c - d < d { c - d } else { d };
    d <= S::recurrence_tolerance()
}

/// Iterates `spec` from `x0` until it returns, hits a discontinuity or
/// reaches `max_steps`.
pub fn iet_orbit<S: Scalar>(spec: &IetSpec<S>, x0: S, max_steps: usize) -> OrbitRecord<S> {
    let c = spec.circumference;
    let mut x = wrap_to(x0, c);
    let mut states = vec![x];
    for step in 1..=max_steps {
        match spec.apply(x) {
            Ok(next) => x = next,
            Err(_) => return OrbitRecord { states, sides: Vec::new(), verdict: IetVerdict::VertexHit { step: step - 1 } },
        }
        if returned(x, x0, c) {
            return OrbitRecord { states, sides: Vec::new(), verdict: IetVerdict::PeriodicIet { period: step } };
        }
        states.push(x);
    }
    OrbitRecord { states, sides: Vec::new(), verdict: IetVerdict::Aperiodic { cutoff: max_steps } }
}

/// Orbit of the edge-crossing map, with the sides crossed.
pub fn tiling_orbit<S: Scalar>(
    angles: &TriangleAngles<S>,
    state: ChordState<S>,
    max_steps: usize,
) -> Result<OrbitRecord<S>> {
    if !state.is_allowed(angles) && !state.touches_vertex(angles) {
        return Err(Error::DisallowedState);
    }
    let c = S::full_turn();
    let mut s = state;
    let mut states = vec![s.x];
    let mut sides = Vec::new();
    for step in 1..=max_steps {
        match iet_step(angles, s) {
            Ok((next, side)) => {
                s = next;
                sides.push(side);
            }
            Err(Error::VertexHit { .. }) => {
                return Ok(OrbitRecord { states, sides, verdict: IetVerdict::VertexHit { step: step - 1 } })
            }
            Err(e) => return Err(e),
        }
        if returned(s.x, state.x, c) {
            return Ok(OrbitRecord { states, sides, verdict: IetVerdict::PeriodicIet { period: step } });
        }
        states.push(s.x);
    }
    Ok(OrbitRecord { states, sides, verdict: IetVerdict::Aperiodic { cutoff: max_steps } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use std::f64::consts::PI;

    #[test]
    fn remark_formulas_on_equilateral() {
        let t = TriangleAngles::<f64>::equilateral();
        let (s1, side1) = iet_step(&t, ChordState::new(PI / 6.0, PI)).unwrap();
        assert_eq!(side1, Side::C);
        assert!((s1.x - 1.5 * PI).abs() < 1e-12);
        let (s2, side2) = iet_step(&t, s1).unwrap();
        assert_eq!(side2, Side::B);
        assert!((s2.x - 5.0 * PI / 6.0).abs() < 1e-12);
        assert_eq!(
            iet_step(&t, ChordState::new(2.0 * PI / 3.0, PI)).unwrap_err(),
            Error::VertexHit { step: 0 }
        );
    }

    #[test]
    fn tiling_iet_is_a_valid_exchange() {
        let t = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        for tau in [0.2, 1.0, PI, 5.9] {
            tiling_iet(&t, tau).validate().unwrap();
            squared_iet(&t, tau).validate().unwrap();
        }
    }

    #[test]
    fn zero_tau_flips_each_piece_in_place() {
        let t = TriangleAngles::<Rational>::from_pi_fractions([(1, 7), (2, 7), (4, 7)]).unwrap();
        let spec = tiling_iet(&t, Rational::from_integer(0));
        for k in 1..40 {
            let x = Rational::new(k, 20);
            if spec.apply(x).is_ok() {
                assert_eq!(spec.apply_unchecked(spec.apply_unchecked(x)), x);
            }
        }
    }

    #[test]
    fn equilateral_square_at_five_pi_thirds() {
        let t = TriangleAngles::<Rational>::equilateral();
        let sq = squared_iet(&t, Rational::new(5, 3));
        assert_eq!(sq.active_count(), 3);
        let rec = iet_orbit(&sq, Rational::new(4, 9), 100);
        assert_eq!(iet_orbit(&sq, Rational::new(1, 9), 100).verdict, IetVerdict::PeriodicIet { period: 1 });
        assert_eq!(rec.verdict, IetVerdict::PeriodicIet { period: 3 });
    }

    #[test]
    fn rational_rotation_has_period_seven() {
        let spec = IetSpec::rotation(2.0 * PI, 2.0 * PI * 3.0 / 7.0);
        let rec = iet_orbit(&spec, 0.0, 100);
        assert_eq!(rec.verdict, IetVerdict::PeriodicIet { period: 7 });
    }

    #[test]
    fn text_round_trip() {
        let t = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        let sq = squared_iet(&t, 2.2);
        let back = IetSpec::from_text(&sq.to_text()).unwrap();
        assert_eq!(back.len(), sq.len());
        for (a, b) in back.shifts.iter().zip(&sq.shifts) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(IetSpec::from_text("0 1 2 0").is_err());
    }

    #[test]
    fn overlapping_images_are_rejected() {
        let bad = IetSpec::new(1.0, vec![0.0, 0.5, 1.0], vec![false, false], vec![0.0, 0.25]);
        assert!(matches!(bad, Err(Error::InvalidIet(_))));
    }
}
