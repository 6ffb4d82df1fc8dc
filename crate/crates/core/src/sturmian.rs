//! Edge words in the non-periodic band of an obtuse tiling.

use serde::{Deserialize, Serialize};

use crate::angles::{word_to_string, Side, TriangleAngles};
use crate::error::{Error, Result};
use crate::geometry::ChordState;
use crate::scalar::Scalar;
use crate::trajectory::{trace_symbolic, Classification};

/// Longest factor length checked by [`sturmian_report`].
pub const BALANCE_FACTOR_LEN: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SturmianReport {
    pub crossings: usize,
    /// Every other crossing is through side C.
    pub alternates_c: bool,
    pub ab_word: String,
    pub balanced: bool,
    /// Frequency of A among the A/B letters.
    pub rotation_estimate: f64,
    /// `α / (α + β)`
    pub expected_rotation: f64,
    pub rotation_ok: bool,
    pub verdict: Classification,
    /// For drift-periodic words: whether one period reads the same reversed
    /// up to rotation. Reported only.
    pub palindromic: Option<bool>,
}

/// Any two factors of the same length `n ≤ max_len` contain numbers of A
/// that differ by at most one.
pub fn is_balanced(word: &[Side], max_len: usize) -> bool {
    let mut prefix = vec![0usize; word.len() + 1];
    for (i, s) in word.iter().enumerate() {
        prefix[i + 1] = prefix[i] + usize::from(*s == Side::A);
    }
    (1..=max_len.min(word.len())).all(|n| {
        let counts = (0..=word.len() - n).map(|i| prefix[i + n] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

/// Whether some rotation of the cyclic word equals its reversal.
pub fn is_cyclic_palindrome(word: &[Side]) -> bool {
    let rev: Vec<Side> = word.iter().rev().copied().collect();
    let n = word.len();
    (0..n).any(|r| (0..n).all(|i| word[(i + r) % n] == rev[i]))
}

/// Traces `length` crossings from `(x, tau)` and analyses the word.
///
/// Requires an obtuse tiling and `2α + 2β < τ < 2γ`.
pub fn sturmian_report<S: Scalar>(angles: &TriangleAngles<S>, tau: S, x: S, length: usize) -> Result<SturmianReport> {
    let two = S::int(2);
    if !angles.is_obtuse() {
        return Err(Error::PreconditionNotMet("the tiling is not obtuse".into()));
    }
    if !(tau > two * (angles.alpha() + angles.beta()) && tau < two * angles.gamma()) {
        return Err(Error::PreconditionNotMet("tau is outside the band (2α+2β, 2γ)".into()));
    }
    let trace = trace_symbolic(angles, ChordState::new(x, tau), length)?;
    let word = &trace.edge_word;

    let parity = word.iter().position(|&s| s == Side::C).unwrap_or(0) % 2;
    let alternates_c = word.iter().enumerate().all(|(i, &s)| (s == Side::C) == (i % 2 == parity));
    let ab: Vec<Side> = word.iter().copied().filter(|&s| s != Side::C).collect();
    let balanced = is_balanced(&ab, BALANCE_FACTOR_LEN);

    let a_count = ab.iter().filter(|&&s| s == Side::A).count();
    let rotation_estimate = if ab.is_empty() { 0.0 } else { a_count as f64 / ab.len() as f64 };
    let (a, b) = (angles.alpha().radians(), angles.beta().radians());
    let expected_rotation = a / (a + b);
    let rotation_ok = !word.is_empty() && (rotation_estimate - expected_rotation).abs() <= 2.0 / word.len() as f64;

    let palindromic = match trace.verdict {
        Classification::DriftPeriodic { period, .. } => Some(is_cyclic_palindrome(&word[..period])),
        _ => None,
    };
    Ok(SturmianReport {
        crossings: word.len(),
        alternates_c,
        ab_word: word_to_string(&ab),
        balanced,
        rotation_estimate,
        expected_rotation,
        rotation_ok,
        verdict: trace.verdict,
        palindromic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn irrational_band_is_sturmian() {
        let angles = TriangleAngles::new(0.3, 0.5_f64.sqrt(), PI - 0.3 - 0.5_f64.sqrt()).unwrap();
        let r = sturmian_report(&angles, 2.5, 5.5, 10_000).unwrap();
        assert!(r.alternates_c && r.balanced && r.rotation_ok, "{r:?}");
        assert!(matches!(r.verdict, Classification::EscapingCutoff { .. }));
    }

    #[test]
    fn shuffled_word_is_unbalanced() {
        let w: Vec<Side> = "AAABBBABAB".chars().filter_map(Side::from_letter).collect();
        assert!(!is_balanced(&w, 20));
        let w: Vec<Side> = "ABABBABABB".chars().filter_map(Side::from_letter).collect();
        assert!(is_balanced(&w, 20));
    }

    #[test]
    fn central_band_is_required() {
        let angles = TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap();
        assert!(sturmian_report(&angles, 5.0, 1.0, 10).is_err());
        assert!(sturmian_report(&TriangleAngles::equilateral(), 2.0, 1.0, 10).is_err());
    }

    #[test]
    fn palindromes() {
        let w: Vec<Side> = "CBCBCA".chars().filter_map(Side::from_letter).collect();
        assert!(is_cyclic_palindrome(&w));
        let w: Vec<Side> = "CBACBA".chars().filter_map(Side::from_letter).collect();
        assert!(!is_cyclic_palindrome(&w));
    }
}
