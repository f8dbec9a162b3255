//! Weighted perimeter and area of polygons, evaluated without the
//! closed-form profile formulas.

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::{integrate_triangles, Tolerance};

/// Vertices within this distance of Γ count as lying on it.
pub const GAMMA_TOL: f64 = 1e-9;

// Longest chord of the unit circle still treated as a piece of Γ: an edge
// of an inscribed polygon spanning at most π/16 of arc.
const MAX_GAMMA_CHORD: f64 = 0.196_034_280_659_121_2;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub closed: bool,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>, closed: bool) -> Result<Self> {
        let need = if closed { 3 } else { 2 };
        if vertices.len() < need {
            return Err(Error::InsufficientPoints { required: need, got: vertices.len() });
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::domain("polygon has a non-finite vertex"));
        }
        Ok(Polygon { vertices, closed })
    }

    pub fn closed(vertices: Vec<Point>) -> Result<Self> {
        Polygon::new(vertices, true)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        let m = if self.closed { n } else { n - 1 };
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace area; positive for counterclockwise order.
    pub fn signed_area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn length(&self) -> f64 {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    pub fn reversed(&self) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Polygon { vertices, closed: self.closed }
    }

    /// O(n²) test that no two non-adjacent edges intersect.
    pub fn is_simple(&self) -> bool {
        let edges: Vec<_> = self.edges().collect();
        let n = edges.len();
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (self.closed && i == 0 && j == n - 1);
                if !adjacent && segments_intersect(edges[i], edges[j]) {
                    return false;
                }
            }
        }
        true
    }
}

fn segments_intersect((a, b): (Point, Point), (c, d): (Point, Point)) -> bool {
    let o = |p: Point, q: Point, r: Point| (q - p).cross(r - p);
    let (d1, d2, d3, d4) = (o(c, d, a), o(c, d, b), o(a, b, c), o(a, b, d));
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

pub(crate) fn shoelace(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>()
}

enum Interface {
    Lines(&'static [f64]),
    Circle,
    None,
}

fn interface(density: &Density) -> Interface {
    match density {
        Density::Strip { .. } => Interface::Lines(&[-1.0, 1.0]),
        Density::Line { .. } | Density::HalfSpace { .. } => Interface::Lines(&[0.0]),
        Density::Ball { .. } => Interface::Circle,
        _ => Interface::None,
    }
}

// Parameters in (0, 1) where the edge a→b crosses Γ.
fn crossings(gamma: &Interface, a: Point, b: Point) -> Vec<f64> {
    let mut ts = Vec::new();
    match gamma {
        Interface::Lines(levels) => {
            for &c in levels.iter() {
                let dy = b.y - a.y;
                if dy != 0.0 {
                    let t = (c - a.y) / dy;
                    if t > 0.0 && t < 1.0 {
                        ts.push(t);
                    }
                }
            }
        }
        Interface::Circle => {
            let d = b - a;
            let (qa, qb, qc) = (d.dot(d), 2.0 * a.dot(d), a.dot(a) - 1.0);
            let disc = qb * qb - 4.0 * qa * qc;
            if qa > 0.0 && disc > 0.0 {
                let s = disc.sqrt();
                for t in [(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)] {
                    if t > 0.0 && t < 1.0 {
                        ts.push(t);
                    }
                }
            }
        }
        Interface::None => {}
    }
    ts.sort_by(f64::total_cmp);
    ts
}

fn on_gamma(density: &Density, gamma: &Interface, p: Point, q: Point) -> bool {
    let near = |x: Point| density.interface_distance(x).is_some_and(|d| d <= GAMMA_TOL);
    match gamma {
        Interface::Lines(_) => near(p) && near(q),
        Interface::Circle => near(p) && near(q) && p.distance(q) <= MAX_GAMMA_CHORD,
        Interface::None => false,
    }
}

/// Σ over edges of length × density: edges are split where they cross Γ,
/// pieces lying on Γ take the smaller one-sided value, all others the value
/// at their midpoint.
pub fn weighted_perimeter(poly: &Polygon, density: &Density) -> f64 {
    let gamma = interface(density);
    let low = density.lambda().map(|l| l.min(1.0));
    let mut total = 0.0;
    for (a, b) in poly.edges() {
        let mut prev = 0.0;
        let ts = crossings(&gamma, a, b);
        for t in ts.into_iter().chain(std::iter::once(1.0)) {
            let (p, q) = (a.lerp(b, prev), a.lerp(b, t));
            let f = match low {
                Some(l) if on_gamma(density, &gamma, p, q) => l,
                _ => density.evaluate(p.midpoint(q)),
            };
            total += f * p.distance(q);
            prev = t;
        }
    }
    total
}

/// Area of the part of the polygon above the line y = c, by clipping.
fn area_above(v: &[Point], c: f64) -> f64 {
    let n = v.len();
    let mut out = Vec::with_capacity(n + 4);
    for i in 0..n {
        let (p, q) = (v[i], v[(i + 1) % n]);
        let (pin, qin) = (p.y > c, q.y > c);
        if pin {
            out.push(p);
        }
        if pin != qin {
            let t = (c - p.y) / (q.y - p.y);
            out.push(Point::new(p.x + t * (q.x - p.x), c));
        }
    }
    if out.len() < 3 {
        0.0
    } else {
        shoelace(&out)
    }
}

/// Signed area of triangle (O, a, b) ∩ unit disk.
fn triangle_disk_area(a: Point, b: Point) -> f64 {
    let mut cuts = vec![0.0];
    cuts.extend(crossings(&Interface::Circle, a, b));
    cuts.push(1.0);
    cuts.windows(2)
        .map(|w| {
            let (p, q) = (a.lerp(b, w[0]), a.lerp(b, w[1]));
            let m = p.midpoint(q);
            if m.dot(m) <= 1.0 {
                0.5 * p.cross(q)
            } else {
                0.5 * p.cross(q).atan2(p.dot(q))
            }
        })
        .sum()
}

/// Signed area of the polygon intersected with the unit disk.
pub fn disk_intersection_area(v: &[Point]) -> f64 {
    let n = v.len();
    (0..n).map(|i| triangle_disk_area(v[i], v[(i + 1) % n])).sum()
}

// Drops vertices on straight runs so smooth quadrature sees few triangles.
fn simplify(v: &[Point]) -> Vec<Point> {
    let n = v.len();
    let out: Vec<Point> = (0..n)
        .filter(|&i| {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            (b - a).cross(c - b).abs() > 1e-14 * (b - a).norm() * (c - b).norm()
        })
        .map(|i| v[i])
        .collect();
    if out.len() < 3 {
        v.to_vec()
    } else {
        out
    }
}

/// Tolerance used for smooth densities.
pub const AREA_QUADRATURE_TOL: Tolerance = Tolerance { abs: 1e-13, rel: 1e-11, max_regions: 200_000 };

/// ∫ f over the polygon: exact clipping for piecewise-constant kinds, fan
/// triangulation and adaptive quadrature for smooth ones.
pub fn weighted_area(poly: &Polygon, density: &Density) -> Result<f64> {
    if !poly.closed {
        return Err(Error::domain("area needs a closed polygon"));
    }
    let v = &poly.vertices;
    let area = shoelace(v);
    Ok(match *density {
        Density::Constant { value } => value * area,
        Density::Strip { lambda } => {
            let outside = area_above(v, 1.0) + area - area_above(v, -1.0);
            area + (lambda - 1.0) * outside
        }
        Density::HalfSpace { lambda } => area + (lambda - 1.0) * area_above(v, 0.0),
        Density::Line { lambda } => lambda * area,
        Density::Ball { lambda } => area + (lambda - 1.0) * disk_intersection_area(v),
        Density::GaussMod { .. } | Density::Cone => {
            let s = simplify(v);
            let tris: Vec<[Point; 3]> = (1..s.len() - 1).map(|i| [s[0], s[i], s[i + 1]]).collect();
            integrate_triangles(|p| density.evaluate(p), &tris, AREA_QUADRATURE_TOL)?.value
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ngon(n: usize, r: f64) -> Polygon {
        Polygon::closed((0..n).map(|k| Point::polar(2.0 * PI * k as f64 / n as f64) * r).collect()).unwrap()
    }

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
        Polygon::closed(vec![Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1)]).unwrap()
    }

    #[test]
    fn circle_constant() {
        let c = ngon(10_000, 1.0);
        let d = Density::constant(1.0).unwrap();
        assert!((weighted_perimeter(&c, &d) / (2.0 * PI) - 1.0).abs() < 1e-6);
        assert!((weighted_area(&c, &d).unwrap() / PI - 1.0).abs() < 1e-6);
    }

    #[test]
    fn circle_on_ball_interface() {
        let c = ngon(10_000, 1.0);
        let d = Density::ball(2.0).unwrap();
        assert!((weighted_perimeter(&c, &d) / (2.0 * PI) - 1.0).abs() < 1e-6);
        assert!((weighted_area(&c, &d).unwrap() / (2.0 * PI) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn square_on_strip() {
        let d = Density::strip(2.0).unwrap();
        assert!((weighted_perimeter(&rect(-1.0, -1.0, 1.0, 1.0), &d) - 8.0).abs() < 1e-15);
        let d3 = Density::strip(3.0).unwrap();
        assert!((weighted_area(&rect(0.0, 0.0, 2.0, 2.0), &d3).unwrap() - 8.0).abs() < 1e-14);
    }

    #[test]
    fn crossing_edges_are_split() {
        let d = Density::strip(3.0).unwrap();
        // Vertical sides run from y = 0 to y = 2: one unit at 1, one at 3.
        let p = weighted_perimeter(&rect(0.0, 0.0, 2.0, 2.0), &d);
        assert!((p - (2.0 + 6.0 + 4.0 + 4.0)).abs() < 1e-14);
    }

    #[test]
    fn disk_clip_of_large_square() {
        let s = rect(-2.0, -2.0, 2.0, 2.0);
        assert!((disk_intersection_area(&s.vertices) - PI).abs() < 1e-14);
        let half = rect(0.0, -2.0, 2.0, 2.0);
        assert!((disk_intersection_area(&half.vertices) - 0.5 * PI).abs() < 1e-14);
    }

    #[test]
    fn reversal() {
        let c = ngon(100, 1.3);
        let d = Density::ball(0.5).unwrap();
        let r = c.reversed();
        assert!((c.signed_area() + r.signed_area()).abs() < 1e-14 * c.signed_area());
        assert!((weighted_perimeter(&c, &d) - weighted_perimeter(&r, &d)).abs() < 1e-13);
    }

    #[test]
    fn simple_check() {
        assert!(ngon(50, 1.0).is_simple());
        let bow = Polygon::closed(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(!bow.is_simple());
    }
}
