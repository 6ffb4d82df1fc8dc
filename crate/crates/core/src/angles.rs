use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{abs, Rational, Scalar};

/// A side of the tiling triangle, named after the opposite angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn letter(self) -> char {
        match self {
            Side::A => 'A',
            Side::B => 'B',
            Side::C => 'C',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'A' | 'a' => Some(Side::A),
            'B' | 'b' => Some(Side::B),
            'C' | 'c' => Some(Side::C),
            _ => None,
        }
    }

    /// Vertex indices (0 = α, 1 = β, 2 = γ) at the ends of this side, in
    /// counterclockwise order around the triangle.
    pub fn vertex_indices(self) -> (usize, usize) {
        match self {
            Side::C => (0, 1),
            Side::A => (1, 2),
            Side::B => (2, 0),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn word_to_string(word: &[Side]) -> String {
    word.iter().map(|s| s.letter()).collect()
}

pub fn parse_word(text: &str) -> Result<Vec<Side>> {
    text.chars()
        .map(|c| Side::from_letter(c).ok_or_else(|| Error::Parse(format!("bad edge letter {c:?}"))))
        .collect()
}

/// Angles of the tiling triangle, `0 < α ≤ β ≤ γ < π` with `α + β + γ = π`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleAngles<S> {
    alpha: S,
    beta: S,
    gamma: S,
}

impl<S: Scalar> TriangleAngles<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Result<Self> {
        let zero = S::zero();
        let pi = S::half_turn();
        if !(alpha > zero && beta > zero && gamma > zero) {
            return Err(Error::DegenerateAngles(format!(
                "angles must be positive, got ({alpha}, {beta}, {gamma})"
            )));
        }
        if !(alpha <= beta && beta <= gamma) {
            return Err(Error::DegenerateAngles(format!(
                "angles must be non-decreasing, got ({alpha}, {beta}, {gamma})"
            )));
        }
        if gamma >= pi {
            return Err(Error::DegenerateAngles(format!("gamma {gamma} is not below pi")));
        }
        let excess = abs(alpha + beta + gamma - pi);
        if excess > S::angle_sum_tolerance() {
            return Err(Error::DegenerateAngles(format!(
                "angles ({alpha}, {beta}, {gamma}) do not sum to pi"
            )));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Sorts the three angles before validating them.
    pub fn from_unordered(a: S, b: S, c: S) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
        Self::new(v[0], v[1], v[2])
    }

    pub fn alpha(&self) -> S {
        self.alpha
    }

    pub fn beta(&self) -> S {
        self.beta
    }

    pub fn gamma(&self) -> S {
        self.gamma
    }

    pub fn equilateral() -> Self {
        let third = S::half_turn() / S::int(3);
        Self { alpha: third, beta: third, gamma: third }
    }

    pub fn isosceles_right() -> Self {
        let quarter = S::half_turn() / S::int(4);
        Self { alpha: quarter, beta: quarter, gamma: quarter + quarter }
    }

    pub fn thirty_sixty_ninety() -> Self {
        let sixth = S::half_turn() / S::int(6);
        Self { alpha: sixth, beta: sixth + sixth, gamma: sixth + sixth + sixth }
    }

    /// Circle positions where the chord's front end meets a vertex:
    /// `0` (α), `2γ` (β) and `2γ + 2α` (γ).
    pub fn breakpoints(&self) -> [S; 3] {
        let two = S::int(2);
        [S::zero(), two * self.gamma, two * (self.gamma + self.alpha)]
    }

    /// The side crossed by a chord whose front end is at `x`: the arc
    /// `[0, 2γ)` is cut off by C, `[2γ, 2γ + 2α)` by A and the rest by B.
    pub fn side_of(&self, x: S) -> Side {
        let [_, c_end, a_end] = self.breakpoints();
        if x < c_end {
            Side::C
        } else if x < a_end {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn angle_of(&self, side: Side) -> S {
        match side {
            Side::A => self.alpha,
            Side::B => self.beta,
            Side::C => self.gamma,
        }
    }

    pub fn is_obtuse(&self) -> bool {
        self.gamma > S::half_turn() / S::int(2)
    }

    pub fn is_right(&self) -> bool {
        self.gamma == S::half_turn() / S::int(2)
    }

    pub fn is_acute(&self) -> bool {
        self.gamma < S::half_turn() / S::int(2)
    }

    /// Coefficients of π when all three angles are known rational multiples.
    pub fn pi_ratios(&self) -> Option<[Rational; 3]> {
        Some([self.alpha.pi_ratio()?, self.beta.pi_ratio()?, self.gamma.pi_ratio()?])
    }

    /// Same angles in radians.
    pub fn in_radians(&self) -> TriangleAngles<f64> {
        TriangleAngles {
            alpha: self.alpha.radians(),
            beta: self.beta.radians(),
            gamma: self.gamma.radians(),
        }
    }

    /// Converts into another scalar type through radians.
    pub fn to_real<F: crate::Real>(&self) -> TriangleAngles<F> {
        TriangleAngles {
            alpha: F::of(self.alpha.radians()),
            beta: F::of(self.beta.radians()),
            gamma: F::of(self.gamma.radians()),
        }
    }
}

impl TriangleAngles<Rational> {
    /// Angles `(p1 π/q1, ...)` from integer pairs, sorted.
    pub fn from_pi_fractions(parts: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = parts.map(|(n, d)| Rational::new(n, d));
        Self::from_unordered(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rejects_bad_sums_and_orders() {
        let err = TriangleAngles::new(PI / 3.0, PI / 3.0, PI / 2.0).unwrap_err();
        assert!(matches!(err, Error::DegenerateAngles(_)));
        assert!(TriangleAngles::new(PI / 2.0, PI / 4.0, PI / 4.0).is_err());
        assert!(TriangleAngles::new(0.0, PI / 2.0, PI / 2.0).is_err());
        assert!(TriangleAngles::from_unordered(PI / 2.0, PI / 4.0, PI / 4.0).is_ok());
    }

    #[test]
    fn exact_angles_must_sum_exactly() {
        assert!(TriangleAngles::from_pi_fractions([(1, 7), (2, 7), (4, 7)]).is_ok());
        assert!(TriangleAngles::from_pi_fractions([(1, 7), (2, 7), (3, 7)]).is_err());
    }

    #[test]
    fn side_partition_follows_c_a_b_order() {
        let t = TriangleAngles::<f64>::equilateral();
        assert_eq!(t.side_of(0.1), Side::C);
        assert_eq!(t.side_of(2.0 * PI / 3.0 + 0.1), Side::A);
        assert_eq!(t.side_of(4.0 * PI / 3.0 + 0.1), Side::B);
        // half-open convention
        let e = TriangleAngles::<Rational>::equilateral();
        assert_eq!(e.side_of(Rational::new(2, 3)), Side::A);
    }

    #[test]
    fn classification_of_shapes() {
        assert!(TriangleAngles::<f64>::equilateral().is_acute());
        assert!(TriangleAngles::<Rational>::isosceles_right().is_right());
        let obtuse = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        assert!(obtuse.is_obtuse());
    }
}
