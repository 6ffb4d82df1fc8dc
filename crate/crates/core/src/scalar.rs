//! Scalar types for angles and circle positions.
//!
//! Every angle-valued quantity in the crate is stored in the unit chosen by
//! its scalar type: radians for `f32`/`f64`, multiples of π for the exact
//! types ([`Rational`] and [`crate::cubic::AyCubic`]). [`Scalar::full_turn`]
//! gives the measure of the whole circle in that unit, so generic code never
//! mentions π directly.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Float, FloatConst, Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Rational multiple of π.
pub type Rational = Ratio<i64>;

pub trait Scalar:
    Copy + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// `true` when comparisons are exact and all tolerances are zero.
    const EXACT: bool;

    fn full_turn() -> Self;

    fn int(n: i64) -> Self;

    fn radians(self) -> f64;

    /// Builds the angle `ratio * π`.
    fn from_pi_ratio(ratio: Rational) -> Self;

    /// Builds an angle from radians, when the type can represent it.
    fn from_radians(radians: f64) -> Option<Self>;

    /// Exact coefficient of π, if this angle is a known rational multiple.
    fn pi_ratio(self) -> Option<Rational> {
        None
    }

    /// Arc tolerance used to decide that a chord end sits on a vertex or a
    /// point sits on a region boundary.
    fn vertex_tolerance() -> Self;

    /// Tolerance for deciding that an orbit has returned to its start.
    fn recurrence_tolerance() -> Self;

    /// Allowed deviation of α + β + γ from π.
    fn angle_sum_tolerance() -> Self;

    fn half_turn() -> Self {
        Self::full_turn() / Self::int(2)
    }
}

/// Floating point scalars usable for plane geometry.
pub trait Real: Scalar + Float + FloatConst {
    fn of(value: f64) -> Self;
}

macro_rules! impl_float_scalar {
    ($t:ty, $vertex:expr, $recur:expr, $sum:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn full_turn() -> Self {
                <$t as FloatConst>::TAU()
            }

            fn int(n: i64) -> Self {
                n as $t
            }

            fn radians(self) -> f64 {
                self as f64
            }

            fn from_pi_ratio(ratio: Rational) -> Self {
                (std::f64::consts::PI * (*ratio.numer() as f64) / (*ratio.denom() as f64)) as $t
            }

            fn from_radians(radians: f64) -> Option<Self> {
                Some(radians as $t)
            }

            fn vertex_tolerance() -> Self {
                $vertex
            }

            fn recurrence_tolerance() -> Self {
                $recur
            }

            fn angle_sum_tolerance() -> Self {
                $sum
            }
        }

        impl Real for $t {
            fn of(value: f64) -> Self {
                value as $t
            }
        }
    };
}

impl_float_scalar!(f64, 1e-9, 1e-9, 1e-12);
impl_float_scalar!(f32, 1e-4, 1e-4, 1e-5);

impl Scalar for Rational {
    const EXACT: bool = true;

    fn full_turn() -> Self {
        Ratio::from_integer(2)
    }

    fn int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn radians(self) -> f64 {
        std::f64::consts::PI * self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_pi_ratio(ratio: Rational) -> Self {
        ratio
    }

    fn from_radians(_radians: f64) -> Option<Self> {
        None
    }

    fn pi_ratio(self) -> Option<Rational> {
        Some(self)
    }

    fn vertex_tolerance() -> Self {
        Ratio::from_integer(0)
    }

    fn recurrence_tolerance() -> Self {
        Ratio::from_integer(0)
    }

    fn angle_sum_tolerance() -> Self {
        Ratio::from_integer(0)
    }
}

/// Reduces an angle into `[0, full_turn)`.
pub fn wrap<S: Scalar>(x: S) -> S {
    let turn = S::full_turn();
    let mut r = x % turn;
    if r < S::zero() {
        r = r + turn;
    }
    // -tiny + turn rounds to turn in floating point
    if r >= turn {
        r = r - turn;
    }
    r
}

/// Shortest arc between two circle positions.
pub fn circular_distance<S: Scalar>(x: S, y: S) -> S {
    let d = wrap(x - y);
    let other = S::full_turn() - d;
    if other < d {
        other
    } else {
        d
    }
}

pub(crate) fn abs<S: Scalar>(x: S) -> S {
    if x < S::zero() {
        S::zero() - x
    } else {
        x
    }
}

/// Parses an angle given either in radians (`"1.047"`) or as a rational
/// multiple of π (`"pi"`, `"pi/3"`, `"pi*2/7"`, `"2*pi/7"`, `"-pi/4"`).
///
/// Exact scalar types only accept the π forms.
pub fn parse_angle<S: Scalar>(text: &str) -> Result<S> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty angle".into()));
    }
    if cleaned.contains("pi") || cleaned.contains('π') {
        let ratio = parse_pi_ratio(&cleaned)?;
        return Ok(S::from_pi_ratio(ratio));
    }
    let radians: f64 = cleaned
        .parse()
        .map_err(|_| Error::Parse(format!("cannot parse angle {text:?}")))?;
    S::from_radians(radians).ok_or_else(|| {
        Error::Parse(format!(
            "exact mode needs angles written as rational multiples of pi, got {text:?}"
        ))
    })
}

fn parse_pi_ratio(expr: &str) -> Result<Rational> {
    let (negative, body) = match expr.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, expr),
    };
    let body = body.replace('π', "pi");
    if body.matches("pi").count() != 1 {
        return Err(Error::Parse(format!("expected exactly one pi in {expr:?}")));
    }
    let body = body.replace("pi", "1");
    let mut value = Ratio::from_integer(1i64);
    let mut op = '*';
    let mut token = String::new();
    let apply = |op: char, token: &str, value: &mut Rational| -> Result<()> {
        let n: i64 = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {token:?} in {expr:?}")))?;
        match op {
            '*' => *value *= Ratio::from_integer(n),
            _ => {
                if n == 0 {
                    return Err(Error::Parse(format!("division by zero in {expr:?}")));
                }
                *value /= Ratio::from_integer(n)
            }
        }
        Ok(())
    };
    for c in body.chars() {
        if c == '*' || c == '/' {
            apply(op, &token, &mut value)?;
            token.clear();
            op = c;
        } else {
            token.push(c);
        }
    }
    apply(op, &token, &mut value)?;
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn wrap_reduces_into_the_circle() {
        assert!((wrap(-0.5f64) - (2.0 * PI - 0.5)).abs() < 1e-15);
        assert_eq!(wrap(2.0 * PI), 0.0);
        assert_eq!(wrap(-1e-18f64), 0.0);
        let r = Rational::new(7, 3);
        assert_eq!(wrap(r), Rational::new(1, 3));
        assert_eq!(wrap(-Rational::new(1, 3)), Rational::new(5, 3));
    }

    #[test]
    fn circular_distance_takes_the_short_way() {
        let d = circular_distance(0.1f64, 2.0 * PI - 0.1);
        assert!((d - 0.2).abs() < 1e-12);
        assert_eq!(
            circular_distance(Rational::new(1, 10), Rational::new(19, 10)),
            Rational::new(1, 5)
        );
    }

    #[test]
    fn parses_pi_forms() {
        assert_eq!(parse_angle::<Rational>("pi/3").unwrap(), Rational::new(1, 3));
        assert_eq!(parse_angle::<Rational>("pi*2/7").unwrap(), Rational::new(2, 7));
        assert_eq!(parse_angle::<Rational>("2*pi/7").unwrap(), Rational::new(2, 7));
        assert_eq!(parse_angle::<Rational>("-pi/4").unwrap(), Rational::new(-1, 4));
        assert_eq!(parse_angle::<Rational>("pi").unwrap(), Rational::new(1, 1));
        let f: f64 = parse_angle("pi/3").unwrap();
        assert!((f - PI / 3.0).abs() < 1e-15);
        let g: f64 = parse_angle("0.25").unwrap();
        assert_eq!(g, 0.25);
    }

    #[test]
    fn exact_mode_rejects_radians() {
        assert!(matches!(parse_angle::<Rational>("1.0"), Err(Error::Parse(_))));
        assert!(parse_angle::<f64>("pi/0").is_err());
        assert!(parse_angle::<f64>("pi*pi").is_err());
    }
}
