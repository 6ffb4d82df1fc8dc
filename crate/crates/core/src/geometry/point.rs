use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point or vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Real> Vec2<F> {
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero())
    }

    pub fn from_angle(theta: F) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> F {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> F {
        self.x.hypot(self.y)
    }

    pub fn angle(self) -> F {
        self.y.atan2(self.x)
    }

    pub fn normalized(self) -> Self {
        self * (F::one() / self.norm())
    }

    pub fn distance(self, o: Self) -> F {
        (self - o).norm()
    }

    pub fn midpoint(self, o: Self) -> Self {
        (self + o) * F::of(0.5)
    }
}

impl<F: Real> Add for Vec2<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<F: Real> Sub for Vec2<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<F: Real> Mul<F> for Vec2<F> {
    type Output = Self;
    fn mul(self, k: F) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<F: Real> Neg for Vec2<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Mirror image of `direction` across the line spanned by `edge`.
///
/// A tiling billiards ray leaves an edge along the mirror image of the ray
/// that arrived, so the outgoing heading is the negation of this vector.
/// The map is an involution.
pub fn refract_direction<F: Real>(direction: Vec2<F>, edge: Vec2<F>) -> Result<Vec2<F>> {
    let u = edge.normalized();
    let d = direction.normalized();
    if d.cross(u).abs() < F::of(1e-12) {
        return Err(Error::GrazingIncidence);
    }
    Ok(u * (F::of(2.0) * d.dot(u)) - d)
}

/// Plane isometry `p ↦ linear · p + offset`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry<F> {
    pub linear: [[F; 2]; 2],
    pub offset: Vec2<F>,
}

impl<F: Real> Isometry<F> {
    pub fn identity() -> Self {
        Self::linear_part([[F::one(), F::zero()], [F::zero(), F::one()]], Vec2::zero())
    }

    fn linear_part(linear: [[F; 2]; 2], offset: Vec2<F>) -> Self {
        Self { linear, offset }
    }

    pub fn translation(v: Vec2<F>) -> Self {
        Self::linear_part([[F::one(), F::zero()], [F::zero(), F::one()]], v)
    }

    /// `p ↦ sign · (p − center)`, with `sign = ±1`.
    pub fn scaled_about(center: Vec2<F>, sign: F) -> Self {
        Self::linear_part([[sign, F::zero()], [F::zero(), sign]], -center * sign)
    }

    /// Reflection across the line through `a` and `b`.
    pub fn reflection(a: Vec2<F>, b: Vec2<F>) -> Self {
        let u = (b - a).normalized();
        let two = F::of(2.0);
        let linear = [
            [two * u.x * u.x - F::one(), two * u.x * u.y],
            [two * u.x * u.y, two * u.y * u.y - F::one()],
        ];
        let mut iso = Self::linear_part(linear, Vec2::zero());
        iso.offset = a - iso.apply_linear(a);
        iso
    }

    pub fn apply_linear(&self, p: Vec2<F>) -> Vec2<F> {
        Vec2::new(
            self.linear[0][0] * p.x + self.linear[0][1] * p.y,
            self.linear[1][0] * p.x + self.linear[1][1] * p.y,
        )
    }

    pub fn apply(&self, p: Vec2<F>) -> Vec2<F> {
        self.apply_linear(p) + self.offset
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.linear;
        let b = &other.linear;
        let linear = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        Self::linear_part(linear, self.apply(other.offset))
    }

    pub fn preserves_orientation(&self) -> bool {
        let l = &self.linear;
        l[0][0] * l[1][1] - l[0][1] * l[1][0] > F::zero()
    }
}
