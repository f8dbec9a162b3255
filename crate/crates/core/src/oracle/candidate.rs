//! Named candidate boundaries with their closed-form weighted area and
//! perimeter.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ball;
use crate::boundary::{Boundary, Piece};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::gaussmod;
use crate::geometry::Point;
use crate::oracle::polygon::Polygon;
use crate::strip;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CandidateId {
    StripI,
    StripII,
    StripIII,
    StripIV,
    BallA,
    BallB,
    BallBig,
    BallInner,
    BallOuterArc,
    BallOrthogonal,
    Line,
    GaussH,
    GaussV,
    Disk,
    HalfSpace,
}

const IDS: [(CandidateId, &str); 15] = [
    (CandidateId::StripI, "strip:i"),
    (CandidateId::StripII, "strip:ii"),
    (CandidateId::StripIII, "strip:iii"),
    (CandidateId::StripIV, "strip:iv"),
    (CandidateId::BallA, "ball:a"),
    (CandidateId::BallB, "ball:b"),
    (CandidateId::BallBig, "ball:big"),
    (CandidateId::BallInner, "ball:A"),
    (CandidateId::BallOuterArc, "ball:B"),
    (CandidateId::BallOrthogonal, "ball:C"),
    (CandidateId::Line, "line"),
    (CandidateId::GaussH, "gauss:h"),
    (CandidateId::GaussV, "gauss:v"),
    (CandidateId::Disk, "disk"),
    (CandidateId::HalfSpace, "halfspace"),
];

impl CandidateId {
    pub fn all() -> impl Iterator<Item = CandidateId> {
        IDS.iter().map(|&(id, _)| id)
    }

    pub fn name(self) -> &'static str {
        IDS.iter().find(|(id, _)| *id == self).map(|(_, n)| *n).expect("every id is named")
    }

    /// λ used when none is given.
    pub fn default_lambda(self) -> f64 {
        use CandidateId::*;
        match self {
            BallInner | BallOuterArc | BallOrthogonal => 0.5,
            GaussH | GaussV | Disk => 1.0,
            _ => 2.0,
        }
    }

    /// Name and default value of the family parameter.
    pub fn parameter(self) -> (&'static str, f64) {
        use CandidateId::*;
        match self {
            StripI | Disk | HalfSpace | BallA => ("v", PI),
            StripII => ("v", 2.0 * PI),
            StripIII | StripIV => ("h", 0.5),
            BallB => ("alpha", 0.3),
            BallBig => ("v", 3.0 * PI),
            BallInner => ("v", 0.25 * PI),
            BallOuterArc => ("beta", 1.0),
            BallOrthogonal => ("beta_hat", 0.25 * PI),
            Line => ("none", 0.0),
            GaussH | GaussV => ("offset", 0.5),
        }
    }
}

impl fmt::Display for CandidateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CandidateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IDS.iter()
            .find(|(_, n)| *n == s)
            .map(|&(id, _)| id)
            .ok_or_else(|| {
                let known: Vec<&str> = IDS.iter().map(|(_, n)| *n).collect();
                Error::InvalidSpec(format!("unknown candidate '{s}' (known: {})", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CandidateSpec {
    pub id: CandidateId,
    pub lambda: f64,
    pub parameter: f64,
}

impl CandidateSpec {
    pub fn new(id: CandidateId, lambda: Option<f64>, parameter: Option<f64>) -> Self {
        CandidateSpec {
            id,
            lambda: lambda.unwrap_or_else(|| id.default_lambda()),
            parameter: parameter.unwrap_or_else(|| id.parameter().1),
        }
    }

    pub fn parse(id: &str, lambda: Option<f64>, parameter: Option<f64>) -> Result<Self> {
        Ok(CandidateSpec::new(id.parse()?, lambda, parameter))
    }

    pub fn density(&self) -> Result<Density> {
        use CandidateId::*;
        let l = self.lambda;
        match self.id {
            StripI | StripII | StripIII | StripIV => Density::strip(l),
            BallA | BallB | BallBig | BallInner | BallOuterArc | BallOrthogonal => Density::ball(l),
            Line => Density::line(l),
            HalfSpace => Density::half_space(l),
            GaussH | GaussV => Ok(Density::gauss_mod()),
            Disk => Density::constant(1.0),
        }
    }

    /// Closed-form (weighted area, weighted perimeter).
    pub fn closed_form(&self) -> Result<(f64, f64)> {
        use CandidateId::*;
        let (l, t) = (self.lambda, self.parameter);
        let pair = |p: crate::profile::ProfilePoint| (p.area, p.perimeter);
        match self.id {
            StripI => Ok((t, strip::profile_i(t)?)),
            StripII => Ok((t, strip::profile_ii(t)?)),
            StripIII => strip::profile_iii(t, l).map(pair),
            StripIV => strip::profile_iv(t, l).map(pair),
            BallA => Ok((t, ball::profile_a(t)?)),
            BallB => ball::profile_b(t, l).map(|b| pair(b.point)),
            BallBig => Ok((t, ball::profile_big(t, l)?)),
            BallInner => Ok((t, ball::profile_A(t, l)?)),
            BallOuterArc => ball::profile_B(t, l).map(pair),
            BallOrthogonal => ball::profile_C(t, l).map(pair),
            Line => strip::line_candidate(l).map(pair),
            GaussH => gaussmod::horizontal_profile(t).map(|p| (p.volume, p.perimeter)),
            GaussV => gaussmod::vertical_profile(t).map(|p| (p.volume, p.perimeter)),
            Disk | HalfSpace => Ok((t, ball::profile_a(t)?)),
        }
    }

    pub fn boundary(&self) -> Result<Boundary> {
        use CandidateId::*;
        let (l, t) = (self.lambda, self.parameter);
        self.density()?;
        match self.id {
            StripI => strip::boundary_i(t),
            StripII => strip::boundary_ii(t),
            StripIII => strip::boundary_iii(t, l),
            StripIV => strip::boundary_iv(t, l),
            BallA => ball::boundary_a(t),
            BallB => ball::boundary_b(t, l),
            BallBig => ball::boundary_big(t, l),
            BallInner => ball::boundary_A(t, l),
            BallOuterArc => ball::boundary_B(t, l),
            BallOrthogonal => ball::boundary_C(t, l),
            Line => strip::line_boundary(l),
            GaussH => gaussmod::horizontal_box(t),
            GaussV => gaussmod::vertical_box(t),
            Disk => circle(Point::ORIGIN, t),
            HalfSpace => {
                let r = (t / PI).sqrt();
                circle(Point::new(0.0, -1.5 * r), t)
            }
        }
    }
}

fn circle(center: Point, area: f64) -> Result<Boundary> {
    if !(area > 0.0) {
        return Err(Error::domain(format!("area must be positive, got {area}")));
    }
    Boundary::new(vec![Piece::arc(center, (area / PI).sqrt(), -0.5 * PI, 2.0 * PI)])
}

/// Polygon with roughly `segments` edges. For piecewise-constant densities
/// straight pieces stay single edges (the density is constant along them);
/// for smooth densities every piece is subdivided in proportion to length.
pub fn sample_candidate(spec: &CandidateSpec, segments: usize) -> Result<Polygon> {
    if segments < 3 {
        return Err(Error::InvalidSpec(format!("need at least 3 segments, got {segments}")));
    }
    let boundary = spec.boundary()?;
    let density = spec.density()?;
    let vertices = if density.is_piecewise_constant() || matches!(density, Density::Constant { .. }) {
        boundary.sample(segments)
    } else {
        sample_by_length(&boundary, segments)
    };
    Polygon::closed(vertices)
}

fn sample_by_length(boundary: &Boundary, segments: usize) -> Vec<Point> {
    let total = boundary.length();
    let mut out = Vec::with_capacity(segments + boundary.pieces.len());
    for piece in &boundary.pieces {
        let n = ((segments as f64 * piece.length() / total).round() as usize).max(1);
        out.extend((0..n).map(|k| piece.point_at(k as f64 / n as f64)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in CandidateId::all() {
            assert_eq!(id.name().parse::<CandidateId>().unwrap(), id);
        }
        assert!("ball:z".parse::<CandidateId>().is_err());
    }

    #[test]
    fn every_default_builds() {
        for id in CandidateId::all() {
            let s = CandidateSpec::new(id, None, None);
            s.closed_form().unwrap();
            sample_candidate(&s, 200).unwrap();
        }
    }
}
