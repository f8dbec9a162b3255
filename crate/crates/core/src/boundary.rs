//! Piecewise boundaries made of segments and circular arcs, with exact
//! tangents at the junctions and uniform-in-angle polygon sampling.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Piece {
    Segment { from: Point, to: Point },
    /// Positive `sweep` runs counterclockwise.
    Arc { center: Point, radius: f64, start: f64, sweep: f64 },
}

impl Piece {
    pub fn segment(from: Point, to: Point) -> Self {
        Piece::Segment { from, to }
    }

    pub fn arc(center: Point, radius: f64, start: f64, sweep: f64) -> Self {
        Piece::Arc { center, radius, start, sweep }
    }

    /// Point at fraction `t ∈ [0, 1]` of the piece.
    pub fn point_at(&self, t: f64) -> Point {
        match *self {
            Piece::Segment { from, to } => from.lerp(to, t),
            Piece::Arc { center, radius, start, sweep } => center + Point::polar(start + t * sweep) * radius,
        }
    }

    pub fn start(&self) -> Point {
        self.point_at(0.0)
    }

    pub fn end(&self) -> Point {
        self.point_at(1.0)
    }

    /// Unit tangent in the direction of travel at fraction `t`.
    pub fn tangent_at(&self, t: f64) -> Point {
        match *self {
            Piece::Segment { from, to } => (to - from).normalized(),
            Piece::Arc { start, sweep, .. } => {
                Point::polar(start + t * sweep + FRAC_PI_2.copysign(sweep))
            }
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Piece::Segment { from, to } => from.distance(to),
            Piece::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    /// Signed curvature; positive when the piece turns left.
    pub fn curvature(&self) -> f64 {
        match *self {
            Piece::Segment { .. } => 0.0,
            Piece::Arc { radius, sweep, .. } => sweep.signum() / radius,
        }
    }

    pub fn reversed(&self) -> Piece {
        match *self {
            Piece::Segment { from, to } => Piece::Segment { from: to, to: from },
            Piece::Arc { center, radius, start, sweep } => Piece::Arc {
                center,
                radius,
                start: start + sweep,
                sweep: -sweep,
            },
        }
    }

    fn is_arc(&self) -> bool {
        matches!(self, Piece::Arc { .. })
    }
}

/// A junction between consecutive pieces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Junction {
    pub point: Point,
    /// Index of the piece ending here.
    pub incoming: usize,
    /// Index of the piece starting here.
    pub outgoing: usize,
    pub tangent_in: Point,
    pub tangent_out: Point,
}

/// A closed, counterclockwise boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Boundary {
    pub pieces: Vec<Piece>,
}

impl Boundary {
    /// Checks that consecutive pieces join within `tol` and the chain closes.
    pub fn new(pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidSpec("boundary has no pieces".into()));
        }
        let scale = pieces.iter().map(|p| p.length()).sum::<f64>().max(1.0);
        let n = pieces.len();
        for i in 0..n {
            let gap = pieces[i].end().distance(pieces[(i + 1) % n].start());
            if gap > 1e-9 * scale {
                return Err(Error::InvalidSpec(format!(
                    "pieces {i} and {} do not join (gap {gap:e})",
                    (i + 1) % n
                )));
            }
        }
        Ok(Boundary { pieces })
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(Piece::length).sum()
    }

    pub fn junctions(&self) -> Vec<Junction> {
        let n = self.pieces.len();
        (0..n)
            .map(|i| {
                let prev = (i + n - 1) % n;
                Junction {
                    point: self.pieces[i].start(),
                    incoming: prev,
                    outgoing: i,
                    tangent_in: self.pieces[prev].tangent_at(1.0),
                    tangent_out: self.pieces[i].tangent_at(0.0),
                }
            })
            .collect()
    }

    /// Polygon vertices with roughly `segments` edges in total. Arcs are
    /// split uniformly in angle with at least one edge each; straight pieces
    /// are a single edge. Junction points are always vertices.
    pub fn sample(&self, segments: usize) -> Vec<Point> {
        let arc_length: f64 = self.pieces.iter().filter(|p| p.is_arc()).map(Piece::length).sum();
        let straight = self.pieces.iter().filter(|p| !p.is_arc()).count();
        let budget = segments.saturating_sub(straight).max(1) as f64;
        let mut out = Vec::with_capacity(segments + self.pieces.len());
        for piece in &self.pieces {
            let n = if piece.is_arc() && arc_length > 0.0 {
                ((budget * piece.length() / arc_length).round() as usize).max(1)
            } else {
                1
            };
            for k in 0..n {
                out.push(piece.point_at(k as f64 / n as f64));
            }
        }
        out
    }

    /// Euclidean enclosed area (Green's theorem on exact pieces).
    pub fn enclosed_area(&self) -> f64 {
        // ∮ x dy − y dx over a segment is the cross product of its ends; over
        // an arc it adds r² times the sweep plus the center's moment.
        0.5 * self
            .pieces
            .iter()
            .map(|p| match *p {
                Piece::Segment { from, to } => from.cross(to),
                Piece::Arc { center, radius, sweep, .. } => {
                    let a = p.start();
                    let b = p.end();
                    center.cross(b - a) + radius * radius * sweep
                }
            })
            .sum::<f64>()
    }

    pub fn mirrored_y(&self) -> Boundary {
        // Reflection reverses orientation, so reverse the piece order too.
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(|p| match *p {
                Piece::Segment { from, to } => Piece::Segment {
                    from: Point::new(to.x, -to.y),
                    to: Point::new(from.x, -from.y),
                },
                Piece::Arc { center, radius, start, sweep } => Piece::Arc {
                    center: Point::new(center.x, -center.y),
                    radius,
                    start: -(start + sweep),
                    sweep,
                },
            })
            .collect();
        Boundary { pieces }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit_square() -> Boundary {
        let p = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)];
        Boundary::new((0..4).map(|i| Piece::segment(p[i], p[(i + 1) % 4])).collect()).unwrap()
    }

    #[test]
    fn circle_area_and_length() {
        let c = Boundary::new(vec![Piece::arc(Point::new(0.3, -0.2), 2.0, 0.1, 2.0 * PI)]).unwrap();
        assert!((c.enclosed_area() - 4.0 * PI).abs() < 1e-13);
        assert!((c.length() - 4.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn half_disk_area() {
        let b = Boundary::new(vec![
            Piece::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0)),
            Piece::arc(Point::ORIGIN, 1.0, 0.0, PI),
        ])
        .unwrap();
        assert!((b.enclosed_area() - PI / 2.0).abs() < 1e-14);
        assert_eq!(b.junctions().len(), 2);
    }

    #[test]
    fn mirror_preserves_area_and_orientation() {
        let b = Boundary::new(vec![
            Piece::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0)),
            Piece::arc(Point::new(0.0, -0.5), 1.25f64.sqrt(), (0.5f64).atan2(1.0), PI - 2.0 * (0.5f64).atan2(1.0)),
        ])
        .unwrap();
        let m = b.mirrored_y();
        assert!(Boundary::new(m.pieces.clone()).is_ok());
        assert!((m.enclosed_area() - b.enclosed_area()).abs() < 1e-14);
    }

    #[test]
    fn rejects_open_chain() {
        let r = Boundary::new(vec![Piece::segment(Point::ORIGIN, Point::new(1.0, 0.0))]);
        assert!(r.is_err());
    }

    #[test]
    fn sampling_keeps_junctions() {
        let sq = unit_square();
        assert_eq!(sq.sample(100).len(), 4);
        let c = Boundary::new(vec![Piece::arc(Point::ORIGIN, 1.0, 0.0, 2.0 * PI)]).unwrap();
        assert_eq!(c.sample(1000).len(), 1000);
    }

    #[test]
    fn arc_tangent_direction() {
        let a = Piece::arc(Point::ORIGIN, 1.0, 0.0, -1.0);
        let t = a.tangent_at(0.0);
        assert!((t.y + 1.0).abs() < 1e-15);
        assert!(a.curvature() < 0.0);
        let r = a.reversed();
        assert!((r.start().distance(a.end())) < 1e-15);
    }
}
