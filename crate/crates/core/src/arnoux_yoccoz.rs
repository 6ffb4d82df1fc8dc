//! The Arnoux-Yoccoz interval exchange and the matching triangle tiling.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::angles::TriangleAngles;
use crate::cubic::AyCubic;
use crate::error::{Error, Result};
use crate::iet::{squared_iet, IetSpec};
use crate::scalar::Rational;

/// The real root of `x + x² + x³ = 1`, about 0.5436890127.
pub fn solve_cubic_root() -> f64 {
    static ROOT: OnceLock<f64> = OnceLock::new();
    *ROOT.get_or_init(|| {
        let f = |x: f64| x + x * x + x * x * x - 1.0;
        let (mut lo, mut hi) = (0.5f64, 0.6f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo < 1e-17 {
                break;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..3 {
            x -= f(x) / (1.0 + 2.0 * x + 3.0 * x * x);
        }
        x
    })
}

fn breakpoints() -> [f64; 5] {
    let a = solve_cubic_root();
    let (a2, a3) = (a * a, a * a * a);
    [a / 2.0, a, a + a2 / 2.0, a + a2, a + a2 + a3 / 2.0]
}

/// The Arnoux-Yoccoz map on the circle of circumference 1.
///
/// Each of the intervals of lengths `a`, `a²`, `a³` has its two halves
/// swapped, followed by a half turn. Fails within `1e-9` of an interior
/// breakpoint.
pub fn ay_step(x: f64) -> Result<f64> {
    let a = solve_cubic_root();
    let (a2, a3) = (a * a, a * a * a);
    let x = x.rem_euclid(1.0);
    let bps = breakpoints();
    if bps.iter().any(|b| (x - b).abs() <= 1e-9) {
        return Err(Error::BreakpointHit);
    }
    let shift = if x < bps[0] {
        a / 2.0
    } else if x < bps[1] {
        -a / 2.0
    } else if x < bps[2] {
        a2 / 2.0
    } else if x < bps[3] {
        -a2 / 2.0
    } else if x < bps[4] {
        a3 / 2.0
    } else {
        -a3 / 2.0
    };
    let y = (x + shift + 0.5).rem_euclid(1.0);
    Ok(if y >= 1.0 { 0.0 } else { y })
}

/// Triangle angles `π(1 − a)/2`, `π(1 − a²)/2`, `π(1 − a³)/2` in radians.
pub fn ay_angles() -> TriangleAngles<f64> {
    let a = solve_cubic_root();
    let half_pi = std::f64::consts::FRAC_PI_2;
    TriangleAngles::new(half_pi * (1.0 - a), half_pi * (1.0 - a * a), half_pi * (1.0 - a * a * a))
        .expect("Arnoux-Yoccoz angles are valid")
}

/// The same angles in exact ℚ(a) arithmetic (unit π); their sum is exactly π.
pub fn ay_angles_exact() -> TriangleAngles<AyCubic> {
    let a = AyCubic::a();
    let one = AyCubic::rational(Rational::from_integer(1));
    let half = AyCubic::rational(Rational::new(1, 2));
    TriangleAngles::new((one - a) * half, (one - a * a) * half, (one - a * a * a) * half)
        .expect("Arnoux-Yoccoz angles are valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjugacyReport {
    pub samples: usize,
    /// Samples where both maps were defined.
    pub evaluated: usize,
    pub max_deviation: f64,
}

fn circle_gap(u: f64, v: f64) -> f64 {
    let d = (u - v).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Compares the squared crossing map at `τ = π` with the Arnoux-Yoccoz map
/// through `y ↦ (y + πa) / 2π`, on `samples` evenly spaced points.
pub fn conjugacy_deviation(angles: &TriangleAngles<f64>, samples: usize) -> ConjugacyReport {
    let g: IetSpec<f64> = squared_iet(angles, std::f64::consts::PI);
    let a = solve_cubic_root();
    let two_pi = std::f64::consts::TAU;
    let h = |y: f64| ((y + std::f64::consts::PI * a) / two_pi).rem_euclid(1.0);
    let mut evaluated = 0;
    let mut max_deviation = 0.0f64;
    for k in 0..samples {
        // irrational offset keeps samples away from the breakpoints
        let y = two_pi * ((k as f64 + 0.381_966_011_250_105) / samples as f64);
        let (Ok(gy), Ok(fy)) = (g.apply(y), ay_step(h(y))) else {
            continue;
        };
        evaluated += 1;
        max_deviation = max_deviation.max(circle_gap(h(gy), fy));
    }
    ConjugacyReport { samples, evaluated, max_deviation }
}

/// [`conjugacy_deviation`] for the Arnoux-Yoccoz angles.
pub fn ay_conjugacy_report(samples: usize) -> ConjugacyReport {
    conjugacy_deviation(&ay_angles(), samples.max(1))
}
