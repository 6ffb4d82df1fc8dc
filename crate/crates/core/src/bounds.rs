//! Period and comoving-region bounds for rational tilings.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::angles::TriangleAngles;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Largest `ε` such that every angle is an integer multiple of `ε`, as a
/// coefficient of π.
pub fn angle_quantum<S: Scalar>(angles: &TriangleAngles<S>) -> Result<Rational> {
    let ratios = angles.pi_ratios().ok_or(Error::NotRational)?;
    let lcm = ratios.iter().fold(1i64, |l, r| l.lcm(r.denom()));
    let gcd = ratios.iter().fold(0i64, |g, r| g.gcd(&(r.numer() * (lcm / r.denom()))));
    Ok(Rational::new(gcd, lcm))
}

/// Upper bound `2π/ε` on the period of any periodic trajectory.
pub fn period_bound<S: Scalar>(angles: &TriangleAngles<S>) -> Result<u64> {
    let eps = angle_quantum(angles)?;
    (Rational::from_integer(2) / eps).to_integer().to_u64().ok_or(Error::NotRational)
}

/// Upper bound `π²/(2ε²)` on the number of maximal comoving regions.
pub fn comoving_region_bound<S: Scalar>(angles: &TriangleAngles<S>) -> Result<u64> {
    let eps = angle_quantum(angles)?;
    (Rational::from_integer(1) / (Rational::from_integer(2) * eps * eps)).to_integer().to_u64().ok_or(Error::NotRational)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(period_bound(&TriangleAngles::<Rational>::equilateral()).unwrap(), 6);
        assert_eq!(period_bound(&TriangleAngles::<Rational>::isosceles_right()).unwrap(), 8);
        let heptagonal = TriangleAngles::from_pi_fractions([(1, 7), (2, 7), (4, 7)]).unwrap();
        assert_eq!(period_bound(&heptagonal).unwrap(), 14);
        assert_eq!(comoving_region_bound(&TriangleAngles::<Rational>::isosceles_right()).unwrap(), 8);
    }

    #[test]
    fn float_angles_are_not_rational() {
        assert_eq!(period_bound(&TriangleAngles::<f64>::equilateral()), Err(Error::NotRational));
    }
}
