//! Grid estimate of the maximal comoving regions of the polygon exchange.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angles::{word_to_string, Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::ChordState;
use crate::iet::iet_step;
use crate::pet::{classify, RegionLabel};
use crate::scalar::{Rational, Scalar};

/// Grid offsets inside each cell, as fractions of the cell width. Odd
/// denominators keep sample points off lines through rational angles.
const OFFSET_X: (i64, i64) = (37, 101);
const OFFSET_TAU: (i64, i64) = (53, 103);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "word", rename_all = "camelCase")]
pub enum CellLabel {
    /// Disallowed zone: the chord misses the triangle.
    Fixed,
    /// Too close to a region boundary or vertex to decide.
    Unresolved,
    /// Canonical representative of the edge word.
    Word(String),
}

impl CellLabel {
    pub fn as_str(&self) -> &str {
        match self {
            CellLabel::Fixed => "fixed",
            CellLabel::Unresolved => "unresolved",
            CellLabel::Word(w) => w,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GridPoint {
    pub x: f64,
    pub tau: f64,
    pub label: CellLabel,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComovingGrid {
    pub grid_n: usize,
    pub word_len: usize,
    pub points: Vec<GridPoint>,
    /// Number of grid points per word label.
    pub classes: BTreeMap<String, usize>,
}

impl ComovingGrid {
    /// Number of distinct word labels, not counting fixed or unresolved points.
    pub fn label_count(&self) -> usize {
        self.classes.len()
    }

    /// `X,tau,word` rows in radians.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("X,tau,word\n");
        for p in &self.points {
            let _ = writeln!(out, "{:.9},{:.9},{}", p.x, p.tau, p.label.as_str());
        }
        out
    }
}

/// Smallest `p` with `word[i] == word[i + p]` wherever both exist.
pub fn minimal_period(word: &[Side]) -> usize {
    (1..word.len()).find(|&p| (0..word.len() - p).all(|i| word[i] == word[i + p])).unwrap_or(word.len())
}

/// Representative of a cyclic word up to shifts by an even number of
/// letters. Words with an odd period are doubled first, so the key always
/// describes a whole number of returns to the same tile orientation.
pub fn canonical_word(word: &[Side]) -> String {
    if word.is_empty() {
        return String::new();
    }
    let mut block = word[..minimal_period(word)].to_vec();
    if block.len() % 2 == 1 {
        block.extend_from_within(..);
    }
    let n = block.len();
    (0..n)
        .step_by(2)
        .map(|r| word_to_string(&[&block[r..], &block[..r]].concat()))
        .min()
        .unwrap_or_default()
}

/// Edge word of length `len` from a state, with the PET region label.
pub fn label_state<S: Scalar>(angles: &TriangleAngles<S>, state: ChordState<S>, len: usize) -> CellLabel {
    match classify(angles, state) {
        Err(_) => return CellLabel::Unresolved,
        Ok(RegionLabel::Disallowed(_)) => return CellLabel::Fixed,
        Ok(RegionLabel::Move(_)) => {}
    }
    let mut word = Vec::with_capacity(len);
    let mut s = state;
    for _ in 0..len {
        match iet_step(angles, s) {
            Ok((next, side)) => {
                word.push(side);
                s = next;
            }
            Err(_) => return CellLabel::Unresolved,
        }
    }
    CellLabel::Word(canonical_word(&word))
}

/// Labels an `n × n` grid over `[0, 2π)²` by edge words of length
/// `word_len`. Points are evaluated in parallel.
pub fn comoving_sample<S: Scalar>(angles: &TriangleAngles<S>, grid_n: usize, word_len: usize) -> Result<ComovingGrid> {
    if grid_n == 0 || word_len == 0 {
        return Err(Error::Parse("grid size and word length must be positive".into()));
    }
    let n = grid_n as i64;
    let coord = |i: i64, (num, den): (i64, i64)| S::from_pi_ratio(Rational::new(2 * (den * i + num), den * n));
    let points: Vec<GridPoint> = (0..grid_n * grid_n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = ((k % grid_n) as i64, (k / grid_n) as i64);
            let state = ChordState::new(coord(i, OFFSET_X), coord(j, OFFSET_TAU));
            GridPoint { x: state.x.radians(), tau: state.tau.radians(), label: label_state(angles, state, word_len) }
        })
        .collect();
    let classes = points
        .par_iter()
        .fold(BTreeMap::new, |mut map, p| {
            if let CellLabel::Word(w) = &p.label {
                *map.entry(w.clone()).or_insert(0usize) += 1;
            }
            map
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(ComovingGrid { grid_n, word_len, points, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::parse_word;

    #[test]
    fn canonical_forms() {
        let w = |s: &str| parse_word(s).unwrap();
        assert_eq!(canonical_word(&w("CBACBA")), "ACBACB");
        assert_eq!(canonical_word(&w("BACBAC")), canonical_word(&w("CBACBA")));
        assert_ne!(canonical_word(&w("ABCABC")), canonical_word(&w("CBACBA")));
        assert_eq!(canonical_word(&w("CBCACB")), "CACB");
        assert_eq!(canonical_word(&w("CACBCA")), "CACB");
        assert_eq!(minimal_period(&w("CBCBCA")), 6);
    }

    #[test]
    fn equilateral_words_are_the_two_hexagons() {
        let g = comoving_sample(&TriangleAngles::<Rational>::equilateral(), 60, 6).unwrap();
        let keys: Vec<&str> = g.classes.keys().map(String::as_str).collect();
        assert_eq!(keys, ["ABCABC", "ACBACB"]);
    }

    #[test]
    fn csv_has_one_row_per_point() {
        let g = comoving_sample(&TriangleAngles::<f64>::isosceles_right(), 10, 6).unwrap();
        let csv = g.to_csv();
        assert!(csv.starts_with("X,tau,word\n"));
        assert_eq!(csv.lines().count(), 101);
    }
}
