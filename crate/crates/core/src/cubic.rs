//! Exact arithmetic in the cubic field ℚ(a), where `a` is the real root of
//! `x + x² + x³ = 1`.
//!
//! The Arnoux-Yoccoz tiling, the Rauzy gasket's central point and the
//! related interval exchanges all live in this field, and the Rauzy
//! renormalization is unstable in floating point around `(a, a², a³)`.
//! Elements are `p + q·a + r·a²` with rational coefficients. As a [`Scalar`]
//! the unit is π, like [`crate::Rational`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AyCubic {
    c: [Rational; 3],
}

impl AyCubic {
    pub fn new(p: Rational, q: Rational, r: Rational) -> Self {
        Self { c: [p, q, r] }
    }

    pub fn rational(p: Rational) -> Self {
        Self::new(p, Rational::zero(), Rational::zero())
    }

    /// The generator `a ≈ 0.5436890127`.
    pub fn a() -> Self {
        Self::new(Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn coefficients(&self) -> [Rational; 3] {
        self.c
    }

    pub fn to_f64(&self) -> f64 {
        let a = crate::arnoux_yoccoz::solve_cubic_root();
        let [p, q, r] = self.c.map(|v| v.to_f64().unwrap_or(f64::NAN));
        p + a * (q + a * r)
    }

    /// Multiplication by `a` on coefficient vectors, using `a³ = 1 − a − a²`.
    fn times_a(c: [Rational; 3]) -> [Rational; 3] {
        let [p, q, r] = c;
        [r, p - r, q - r]
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(a)");
        // Columns of the multiplication-by-self matrix in the basis (1, a, a²).
        let col0 = self.c;
        let col1 = Self::times_a(col0);
        let col2 = Self::times_a(col1);
        let m = [
            [col0[0], col1[0], col2[0]],
            [col0[1], col1[1], col2[1]],
            [col0[2], col1[2], col2[2]],
        ];
        let det = det3(&m);
        // Cramer's rule for m · y = (1, 0, 0).
        let mut y = [Rational::zero(); 3];
        for (k, slot) in y.iter_mut().enumerate() {
            let mut mk = m;
            for (row, entry) in mk.iter_mut().enumerate() {
                entry[k] = if row == 0 { Rational::one() } else { Rational::zero() };
            }
            *slot = det3(&mk) / det;
        }
        Self { c: y }
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        // Clear denominators; the integer element P + Qa + Ra² has the same sign.
        let lcm = self
            .c
            .iter()
            .fold(1i128, |acc, v| acc.lcm(&(*v.denom() as i128)));
        let ints = self
            .c
            .map(|v| (*v.numer() as i128) * (lcm / (*v.denom() as i128)));
        let value = dd::eval_in_a(ints);
        // a is an algebraic integer, so the norm of a nonzero integer element
        // is at least 1 in absolute value; its conjugates are bounded by
        // |a'| = a^(-1/2) < 1.36.
        let [p, q, r] = ints.map(|v| (v as f64).abs());
        let conj = p + 1.36 * q + 1.85 * r;
        let lower_bound = 1.0 / (conj * conj);
        let error = 1e-29 * (p + q + r + 1.0);
        assert!(
            lower_bound > 4.0 * error,
            "coefficients of {self} are too large for certified sign evaluation"
        );
        if value > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn floor(&self) -> i64 {
        let mut k = self.to_f64().floor() as i64;
        while *self - Self::int(k) < Self::zero() {
            k -= 1;
        }
        while *self - Self::int(k + 1) >= Self::zero() {
            k += 1;
        }
        k
    }
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

impl fmt::Display for AyCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.c;
        write!(f, "({p}) + ({q})a + ({r})a^2")
    }
}

impl Add for AyCubic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c[0] + o.c[0], self.c[1] + o.c[1], self.c[2] + o.c[2])
    }
}

impl Sub for AyCubic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c[0] - o.c[0], self.c[1] - o.c[1], self.c[2] - o.c[2])
    }
}

impl Neg for AyCubic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c[0], -self.c[1], -self.c[2])
    }
}

impl Mul for AyCubic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [p1, q1, r1] = self.c;
        let [p2, q2, r2] = o.c;
        // a³ = 1 − a − a², a⁴ = 2a − 1
        let s = q1 * r2 + r1 * q2;
        let t = r1 * r2;
        let two = Rational::from_integer(2);
        Self::new(
            p1 * p2 + s - t,
            p1 * q2 + q1 * p2 - s + two * t,
            p1 * r2 + q1 * q2 + r1 * p2 - s,
        )
    }
}

impl Div for AyCubic {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inverse()
    }
}

impl Rem for AyCubic {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        let k = (self / o).floor();
        let r = self - o * Self::int(k);
        // keep the sign of the dividend, like the primitive types
        if self < Self::zero() && r > Self::zero() {
            r - o.abs()
        } else {
            r
        }
    }
}

impl PartialOrd for AyCubic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((*self - *other).sign())
    }
}

impl Zero for AyCubic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for AyCubic {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Num for AyCubic {
    type FromStrRadixErr = num_rational::ParseRatioError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Ratio::from_str_radix(s, radix).map(Self::rational)
    }
}

impl Signed for AyCubic {
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -*self
        } else {
            *self
        }
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if *self <= *other {
            Self::zero()
        } else {
            *self - *other
        }
    }
    fn signum(&self) -> Self {
        match self.sign() {
            Ordering::Greater => Self::one(),
            Ordering::Less => -Self::one(),
            Ordering::Equal => Self::zero(),
        }
    }
    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Scalar for AyCubic {
    const EXACT: bool = true;

    fn full_turn() -> Self {
        Self::int(2)
    }

    fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    fn radians(self) -> f64 {
        std::f64::consts::PI * self.to_f64()
    }

    fn from_pi_ratio(ratio: Rational) -> Self {
        Self::rational(ratio)
    }

    fn from_radians(_radians: f64) -> Option<Self> {
        None
    }

    fn pi_ratio(self) -> Option<Rational> {
        (self.c[1].is_zero() && self.c[2].is_zero()).then_some(self.c[0])
    }

    fn vertex_tolerance() -> Self {
        Self::zero()
    }

    fn recurrence_tolerance() -> Self {
        Self::zero()
    }

    fn angle_sum_tolerance() -> Self {
        Self::zero()
    }
}

/// Double-double evaluation of integer combinations of 1, a, a².
mod dd {
    #[derive(Clone, Copy)]
    struct Dd(f64, f64);

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd(s, (a - (s - bb)) + (b - bb))
    }

    fn add(x: Dd, y: Dd) -> Dd {
        let s = two_sum(x.0, y.0);
        let t = s.1 + x.1 + y.1;
        let r = two_sum(s.0, t);
        Dd(r.0, r.1)
    }

    fn mul(x: Dd, y: Dd) -> Dd {
        let p = x.0 * y.0;
        let e = x.0.mul_add(y.0, -p);
        let e = e + x.0 * y.1 + x.1 * y.0;
        let r = two_sum(p, e);
        Dd(r.0, r.1)
    }

    fn from_i128(v: i128) -> Dd {
        let hi = v as f64;
        let lo = (v - hi as i128) as f64;
        Dd(hi, lo)
    }

    fn root() -> Dd {
        // One Newton step in double-double from the f64 root of x³ + x² + x − 1.
        let x = Dd(crate::arnoux_yoccoz::solve_cubic_root(), 0.0);
        let one = Dd(1.0, 0.0);
        let x2 = mul(x, x);
        let x3 = mul(x2, x);
        let f = add(add(add(x3, x2), x), Dd(-1.0, 0.0));
        let df = add(add(mul(Dd(3.0, 0.0), x2), mul(Dd(2.0, 0.0), x)), one);
        let step = f.0 / df.0;
        add(x, Dd(-step, 0.0))
    }

    pub(super) fn eval_in_a(c: [i128; 3]) -> f64 {
        let a = root();
        let a2 = mul(a, a);
        let v = add(add(from_i128(c[0]), mul(from_i128(c[1]), a)), mul(from_i128(c[2]), a2));
        v.0 + v.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn defining_relation_holds() {
        let a = AyCubic::a();
        assert_eq!(a + a * a + a * a * a, AyCubic::one());
    }

    #[test]
    fn inverse_of_a_is_one_plus_a_plus_a_squared() {
        let a = AyCubic::a();
        assert_eq!(AyCubic::one() / a, AyCubic::one() + a + a * a);
        let x = AyCubic::new(r(3, 2), r(-1, 3), r(5, 7));
        assert_eq!(x * (AyCubic::one() / x), AyCubic::one());
    }

    #[test]
    fn ordering_matches_numeric_value() {
        let a = AyCubic::a();
        assert!(a > AyCubic::rational(r(1, 2)));
        assert!(a < AyCubic::rational(r(11, 20)));
        // 2a − 1 = a⁴ > 0 but small
        assert!(a * AyCubic::int(2) - AyCubic::one() > AyCubic::zero());
        assert!(a * a > a * a * a);
    }

    #[test]
    fn remainder_reduces_modulo_two() {
        let a = AyCubic::a();
        let x = a + AyCubic::int(5);
        let m = x % AyCubic::int(2);
        assert_eq!(m, a + AyCubic::one());
        let y = -a;
        assert_eq!(crate::scalar::wrap(y), AyCubic::int(2) - a);
    }
}
