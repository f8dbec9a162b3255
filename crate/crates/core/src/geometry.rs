//! Planar points and the handful of vector operations the profile and oracle
//! code needs.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta` from the positive x axis.
    #[inline]
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point::new(c, s)
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    /// Counterclockwise rotation by a right angle.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Unsigned angle in `[0, π]` between two nonzero vectors.
pub fn angle_between(a: Point, b: Point) -> f64 {
    a.cross(b).abs().atan2(a.dot(b))
}

/// `t − sin t cos t`, twice the area of a circular segment of half-angle `t`
/// in the unit circle. Series near zero avoids the cubic cancellation.
pub fn segment_area_fn(t: f64) -> f64 {
    if t.abs() < 1e-3 {
        let t2 = t * t;
        t * t2 * (2.0 / 3.0 - t2 * (2.0 / 15.0 - t2 * 4.0 / 315.0))
    } else {
        t - 0.5 * (2.0 * t).sin()
    }
}

/// `t / sin t` with the removable singularity at zero filled in.
pub fn t_over_sin(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        1.0 + t * t / 6.0
    } else {
        t / t.sin()
    }
}

/// `(t − sin t cos t) / sin² t`, the segment area over a unit half-chord.
pub fn segment_over_sin2(t: f64) -> f64 {
    if t.abs() < 1e-3 {
        // (2/3)t³/t² · (1 + t²/3 + ...) expanded to the needed order
        let t2 = t * t;
        t * (2.0 / 3.0 + t2 * 4.0 / 45.0)
    } else {
        let s = t.sin();
        segment_area_fn(t) / (s * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn segment_series_matches_direct_form() {
        for &t in &[2e-3f64, 5e-3, 1e-2] {
            let direct = t - (t.sin() * t.cos());
            assert!((segment_area_fn(t) - direct).abs() < 1e-15);
        }
        let t = 9.99e-4f64;
        let direct = t - 0.5 * (2.0 * t).sin();
        assert!((segment_area_fn(t) - direct).abs() / direct < 1e-6);
    }

    #[test]
    fn small_argument_ratios_are_continuous() {
        for &t in &[0.999e-3f64, 1.001e-3] {
            let reference = segment_area_fn(t) / (t.sin() * t.sin());
            assert!((segment_over_sin2(t) - reference).abs() / reference < 1e-12);
        }
        for &t in &[0.99e-4f64, 1.01e-4] {
            assert!((t_over_sin(t) - t / t.sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn angles() {
        assert!((angle_between(Point::new(1.0, 0.0), Point::new(0.0, 2.0)) - PI / 2.0).abs() < 1e-15);
        assert!((angle_between(Point::new(1.0, 0.0), Point::new(-1.0, 0.0)) - PI).abs() < 1e-15);
    }
}
