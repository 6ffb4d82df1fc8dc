//! The Rauzy gasket on the simplex `x1 + x2 + x3 = 1`.

use serde::{Deserialize, Serialize};

use crate::angles::TriangleAngles;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum RauzyVerdict {
    /// Every step up to the cap was possible.
    InGasketUpTo { iterations: usize },
    /// At step `step` no coordinate exceeded the sum of the other two.
    Exits { step: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RauzyExpansion<S> {
    /// Index of the largest coordinate at each step.
    pub digits: Vec<usize>,
    /// The starting point followed by the point after each step.
    pub points: Vec<[S; 3]>,
    pub verdict: RauzyVerdict,
}

fn validate<S: Scalar>(x: &[S; 3]) -> Result<()> {
    if x.iter().any(|v| *v <= S::zero()) {
        return Err(Error::InvalidSimplexPoint("coordinates must be positive".into()));
    }
    let sum = x[0] + x[1] + x[2];
    let tol = if S::EXACT { 0.0 } else { 1e-12 };
    if (sum - S::one()).abs().radians() / S::one().radians() > tol {
        return Err(Error::InvalidSimplexPoint(format!("coordinates sum to {sum}, not 1")));
    }
    Ok(())
}

/// Subtracts the two smaller coordinates from the largest and rescales to
/// sum 1. Returns `None` when the largest does not exceed the others' sum.
pub fn gasket_step<S: Scalar>(x: &[S; 3]) -> Option<(usize, [S; 3])> {
    let i = (0..3).fold(0, |best, k| if x[k] > x[best] { k } else { best });
    let others = x[(i + 1) % 3] + x[(i + 2) % 3];
    if x[i] <= others {
        return None;
    }
    let mut y = *x;
    y[i] = x[i] - others;
    let sum = y[0] + y[1] + y[2];
    Some((i, y.map(|v| v / sum)))
}

/// Repeats [`gasket_step`] up to `max_iters` times.
pub fn rauzy_gasket_expand<S: Scalar>(x: [S; 3], max_iters: usize) -> Result<RauzyExpansion<S>> {
    validate(&x)?;
    let mut points = vec![x];
    let mut digits = Vec::new();
    let mut current = x;
    for step in 0..max_iters {
        let Some((i, next)) = gasket_step(&current) else {
            return Ok(RauzyExpansion { digits, points, verdict: RauzyVerdict::Exits { step } });
        };
        digits.push(i);
        points.push(next);
        current = next;
    }
    Ok(RauzyExpansion { digits, points, verdict: RauzyVerdict::InGasketUpTo { iterations: max_iters } })
}

/// Triangle with angles `π(1 − x_i)/2`, sorted ascending.
pub fn rauzy_triangle<S: Scalar>(x: [S; 3]) -> Result<TriangleAngles<S>> {
    validate(&x)?;
    let two = S::int(2);
    let [a, b, c] = x.map(|v| S::half_turn() * (S::one() - v) / two);
    TriangleAngles::from_unordered(a, b, c)
}
