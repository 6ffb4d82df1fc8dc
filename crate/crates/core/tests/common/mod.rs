#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use tiling_billiards::{ChordState, TriangleAngles};

/// Angles no smaller than 0.1 rad, in ascending order.
pub fn random_angles<R: Rng>(rng: &mut R) -> TriangleAngles<f64> {
    loop {
        let a = rng.gen_range(0.1..PI - 0.2);
        let b = rng.gen_range(0.1..PI - 0.1 - a);
        let c = PI - a - b;
        if c >= 0.1 {
            return TriangleAngles::from_unordered(a, b, c).unwrap();
        }
    }
}

pub fn random_obtuse<R: Rng>(rng: &mut R) -> TriangleAngles<f64> {
    let g = rng.gen_range(PI / 2.0 + 0.05..PI - 0.2);
    let a = rng.gen_range(0.1..(PI - g) / 2.0);
    TriangleAngles::new(a, PI - g - a, g).unwrap()
}

/// A state whose chord meets the triangle away from the vertices.
pub fn random_state<R: Rng>(rng: &mut R, angles: &TriangleAngles<f64>) -> ChordState<f64> {
    loop {
        let s = ChordState::new(rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI));
        if s.is_allowed(angles) && !s.touches_vertex(angles) {
            return s;
        }
    }
}
