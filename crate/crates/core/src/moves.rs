//! Two-crossing moves between tiles of the same orientation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angles::{Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::{Orientation, TilingModel, Vec2};
use crate::scalar::{Real, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Alpha,
    Beta,
    Gamma,
}

/// `±α`, `±β` or `±γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    /// `+1` or `−1`.
    pub sign: i8,
}

/// Ordered pair of sides crossed by one move, e.g. `CB`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgePair(pub Side, pub Side);

impl EdgePair {
    pub const ALL: [EdgePair; 6] = [
        EdgePair(Side::C, Side::B),
        EdgePair(Side::C, Side::A),
        EdgePair(Side::A, Side::C),
        EdgePair(Side::A, Side::B),
        EdgePair(Side::B, Side::A),
        EdgePair(Side::B, Side::C),
    ];

    pub fn to_move(self) -> Result<Move> {
        Move::from_pair(self.0, self.1)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut chars = text.chars();
        match (chars.next().and_then(Side::from_letter), chars.next().and_then(Side::from_letter), chars.next()) {
            (Some(a), Some(b), None) if a != b => Ok(EdgePair(a, b)),
            _ => Err(Error::Parse(format!("bad edge pair {text:?}"))),
        }
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl Move {
    pub const fn new(kind: MoveKind, sign: i8) -> Self {
        Self { kind, sign }
    }

    /// Table of two-edge moves: CB ↦ α, BC ↦ −α, AC ↦ β, CA ↦ −β,
    /// BA ↦ γ, AB ↦ −γ.
    pub fn from_pair(first: Side, second: Side) -> Result<Self> {
        use MoveKind::*;
        use Side::*;
        Ok(match (first, second) {
            (C, B) => Move::new(Alpha, 1),
            (B, C) => Move::new(Alpha, -1),
            (A, C) => Move::new(Beta, 1),
            (C, A) => Move::new(Beta, -1),
            (B, A) => Move::new(Gamma, 1),
            (A, B) => Move::new(Gamma, -1),
            (x, y) => return Err(Error::InvalidMovePair(x.letter(), y.letter())),
        })
    }

    pub fn edge_pair(self) -> EdgePair {
        use MoveKind::*;
        use Side::*;
        let (a, b) = match self.kind {
            Alpha => (C, B),
            Beta => (A, C),
            Gamma => (B, A),
        };
        if self.sign > 0 {
            EdgePair(a, b)
        } else {
            EdgePair(b, a)
        }
    }

    /// Signed angle of the move: `±α`, `±β` or `±γ`.
    pub fn angle<S: Scalar>(self, angles: &TriangleAngles<S>) -> S {
        let base = match self.kind {
            MoveKind::Alpha => angles.alpha(),
            MoveKind::Beta => angles.beta(),
            MoveKind::Gamma => angles.gamma(),
        };
        if self.sign > 0 {
            base
        } else {
            -base
        }
    }

    /// Lattice offset `(dm, dn)` of the move from a tile of `orientation`.
    pub fn lattice_delta(self, orientation: Orientation) -> (i64, i64) {
        let (dm, dn) = match self.kind {
            MoveKind::Alpha => (1, -1),
            MoveKind::Beta => (0, 1),
            MoveKind::Gamma => (-1, 0),
        };
        let s = i64::from(self.sign) * if orientation == Orientation::Positive { 1 } else { -1 };
        (s * dm, s * dn)
    }

    /// Plane translation of the move: `±e_A`, `±e_B` or `±e_C`, negated
    /// when starting from a negative tile.
    pub fn translation<F: Real>(self, tiling: &TilingModel<F>, orientation: Orientation) -> Vec2<F> {
        let (dm, dn) = self.lattice_delta(orientation);
        tiling.lattice_vector(dm, dn)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        let name = match self.kind {
            MoveKind::Alpha => "alpha",
            MoveKind::Beta => "beta",
            MoveKind::Gamma => "gamma",
        };
        write!(f, "{sign}{name}")
    }
}

/// Splits an even edge word into consecutive pairs of moves.
pub fn moves_of_word(word: &[Side]) -> Result<Vec<Move>> {
    if word.len() % 2 != 0 {
        return Err(Error::OddWord);
    }
    word.chunks(2).map(|p| Move::from_pair(p[0], p[1])).collect()
}

/// Net signed numbers of α, β and γ moves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveCounts {
    pub n_alpha: i64,
    pub n_beta: i64,
    pub n_gamma: i64,
}

impl MoveCounts {
    pub fn of_moves(moves: &[Move]) -> Self {
        let mut c = MoveCounts::default();
        for m in moves {
            let s = i64::from(m.sign);
            match m.kind {
                MoveKind::Alpha => c.n_alpha += s,
                MoveKind::Beta => c.n_beta += s,
                MoveKind::Gamma => c.n_gamma += s,
            }
        }
        c
    }

    /// The moves return to the starting tile exactly when the three net
    /// counts agree.
    pub fn is_closed(&self) -> bool {
        self.n_alpha == self.n_beta && self.n_beta == self.n_gamma
    }
}

/// Signed counts of the moves in an even edge word.
pub fn move_counts(word: &[Side]) -> Result<MoveCounts> {
    Ok(MoveCounts::of_moves(&moves_of_word(word)?))
}

/// `2(α n_α + β n_β + γ n_γ)`, positive counterclockwise.
pub fn total_turning<S: Scalar>(moves: &[Move], angles: &TriangleAngles<S>) -> S {
    let c = MoveCounts::of_moves(moves);
    S::int(2) * (angles.alpha() * S::int(c.n_alpha) + angles.beta() * S::int(c.n_beta) + angles.gamma() * S::int(c.n_gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::parse_word;
    use crate::geometry::TriangleCoord;

    #[test]
    fn table_is_a_bijection() {
        for pair in EdgePair::ALL {
            let m = pair.to_move().unwrap();
            assert_eq!(m.edge_pair(), pair);
        }
        assert_eq!(Move::from_pair(Side::A, Side::A), Err(Error::InvalidMovePair('A', 'A')));
    }

    #[test]
    fn counts_for_small_words() {
        let c = move_counts(&parse_word("CBACBA").unwrap()).unwrap();
        assert_eq!(c, MoveCounts { n_alpha: 1, n_beta: 1, n_gamma: 1 });
        assert!(c.is_closed());
        let c = move_counts(&parse_word("CB").unwrap()).unwrap();
        assert_eq!((c.n_alpha, c.is_closed()), (1, false));
        assert!(move_counts(&[]).unwrap().is_closed());
        assert_eq!(move_counts(&parse_word("CBA").unwrap()), Err(Error::OddWord));
    }

    #[test]
    fn turning_values() {
        let eq = TriangleAngles::<f64>::equilateral();
        let loop_moves = moves_of_word(&parse_word("CBACBA").unwrap()).unwrap();
        assert!((total_turning(&loop_moves, &eq) - std::f64::consts::TAU).abs() < 1e-12);
        assert_eq!(total_turning(&[], &eq), 0.0);
        let obtuse = TriangleAngles::new(0.3, 0.5, std::f64::consts::PI - 0.8).unwrap();
        let t = total_turning(&[Move::new(MoveKind::Alpha, -1)], &obtuse);
        assert!((t + 0.6).abs() < 1e-12);
    }

    #[test]
    fn lattice_deltas_follow_neighbour_lookups() {
        for tile in [TriangleCoord::positive(1, 2), TriangleCoord::negative(-1, 0)] {
            for pair in EdgePair::ALL {
                let end = tile.neighbor(pair.0).neighbor(pair.1);
                let (dm, dn) = pair.to_move().unwrap().lattice_delta(tile.orientation);
                assert_eq!((end.m - tile.m, end.n - tile.n), (dm, dn), "{pair} from {tile:?}");
            }
        }
    }
}
