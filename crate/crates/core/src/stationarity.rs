//! Pointwise necessary conditions for minimizers: the refraction law where
//! a boundary crosses Γ, the contact-angle bound where it touches Γ, and
//! constant generalized mean curvature along smooth pieces.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::boundary::{Boundary, Piece};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::geometry::{angle_between, Point};

/// Cosines below this are treated as zero.
const COS_EPS: f64 = 1e-12;

/// Default relative tolerance for curvature constancy.
pub const CONSTANCY_TOL: f64 = 1e-9;

/// A transversal crossing of Γ. Angles are measured between the boundary
/// and a common orientation of the Γ tangent: `alpha_minus` uses the
/// direction of travel arriving from the low side, `alpha_plus` the
/// direction leaving into the high side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CornerSample {
    pub point: Point,
    pub f_minus: f64,
    pub f_plus: f64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
}

impl CornerSample {
    pub fn new(point: Point, f_minus: f64, f_plus: f64, alpha_plus: f64, alpha_minus: f64) -> Result<Self> {
        let c = CornerSample { point, f_minus, f_plus, alpha_plus, alpha_minus };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if !(self.f_minus > 0.0 && self.f_minus <= self.f_plus && self.f_plus.is_finite()) {
            return Err(Error::InvalidCorner(format!(
                "need 0 < f_minus <= f_plus, got {} and {}",
                self.f_minus, self.f_plus
            )));
        }
        for a in [self.alpha_plus, self.alpha_minus] {
            if !(0.0..=PI).contains(&a) {
                return Err(Error::InvalidCorner(format!("angle {a} outside [0, pi]")));
            }
        }
        Ok(())
    }

    /// Distance of `alpha_plus` inside [acos(f⁻/f⁺), π − acos(f⁻/f⁺)], the
    /// range the law allows; negative outside, zero at the endpoints.
    pub fn admissibility_margin(&self) -> f64 {
        let lo = (self.f_minus / self.f_plus).clamp(-1.0, 1.0).acos();
        (self.alpha_plus - lo).min(PI - lo - self.alpha_plus)
    }
}

/// cos α⁺ / cos α⁻ − f⁻/f⁺, or cos α⁺ when cos α⁻ vanishes. Zero exactly
/// when the refraction law holds.
pub fn snell_residual(corner: &CornerSample) -> Result<f64> {
    corner.check()?;
    let cp = corner.alpha_plus.cos();
    let cm = corner.alpha_minus.cos();
    if cm.abs() > COS_EPS {
        Ok(cp / cm - corner.f_minus / corner.f_plus)
    } else if cp.abs() <= COS_EPS {
        // Orthogonal on both sides: the law holds for any pair of densities.
        Ok(0.0)
    } else {
        Ok(cp)
    }
}

/// The law written with complementary angles γ = π/2 − α:
/// f⁺ sin γ⁺ − f⁻ sin γ⁻.
pub fn snell_residual_sine(f_minus: f64, f_plus: f64, gamma_plus: f64, gamma_minus: f64) -> f64 {
    f_plus * gamma_plus.sin() - f_minus * gamma_minus.sin()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub pass: bool,
    /// Bound minus angle; negative when violated.
    pub margin: f64,
}

/// A piece on the side of density `f_i` touching Γ must meet it at an angle
/// of at most acos(f⁻/f_i).
pub fn tangential_bound_check(f_minus: f64, f_i: f64, contact_angle: f64, tol: f64) -> Result<BoundCheck> {
    if !(f_minus > 0.0 && f_i >= f_minus) {
        return Err(Error::domain(format!("need f_i >= f_minus > 0, got {f_i} and {f_minus}")));
    }
    if !(0.0..=0.5 * PI + tol).contains(&contact_angle) {
        return Err(Error::domain(format!("contact angle {contact_angle} outside [0, pi/2]")));
    }
    let bound = if f_i == f_minus { 0.0 } else { (f_minus / f_i).acos() };
    let margin = bound - contact_angle;
    Ok(BoundCheck { pass: margin >= -tol, margin })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Low,
    High,
    OnInterface,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JunctionCheck {
    /// The boundary passes from the low to the high side, possibly running
    /// along Γ on the low side.
    Refraction { corner: CornerSample, residual: f64 },
    /// A piece leaves Γ into the low side.
    Contact { point: Point, f_minus: f64, f_i: f64, angle: f64, check: BoundCheck },
    /// Junction away from Γ, or with both pieces on one side: the tangent
    /// must be continuous.
    Smooth { point: Point, kink: f64 },
}

impl JunctionCheck {
    /// Worst violation measure: |residual|, negative contact margin, or kink.
    pub fn defect(&self) -> f64 {
        match *self {
            JunctionCheck::Refraction { residual, .. } => residual.abs(),
            JunctionCheck::Contact { check, .. } => (-check.margin).max(0.0),
            JunctionCheck::Smooth { kink, .. } => kink,
        }
    }
}

const ON_INTERFACE_TOL: f64 = 1e-9;

fn classify(density: &Density, piece: &Piece) -> Side {
    let on = [0.25, 0.5, 0.75]
        .iter()
        .all(|&t| density.interface_distance(piece.point_at(t)).is_some_and(|d| d <= ON_INTERFACE_TOL));
    if on {
        return Side::OnInterface;
    }
    let hi = density.lambda().unwrap_or(1.0).max(1.0);
    if density.evaluate(piece.point_at(0.5)) >= hi {
        Side::High
    } else {
        Side::Low
    }
}

/// Checks every junction of `boundary` against the conditions above.
pub fn junction_checks(density: &Density, boundary: &Boundary, tol: f64) -> Result<Vec<JunctionCheck>> {
    if !density.is_piecewise_constant() {
        return Err(Error::domain("junction checks need a piecewise-constant density"));
    }
    let lambda = density.lambda().expect("piecewise density has lambda");
    let (f_lo, f_hi) = (lambda.min(1.0), lambda.max(1.0));
    boundary
        .junctions()
        .into_iter()
        .map(|j| {
            let p = j.point;
            let kink = angle_between(j.tangent_in, j.tangent_out);
            let on_gamma = density.interface_distance(p).is_some_and(|d| d <= ON_INTERFACE_TOL);
            if !on_gamma {
                return Ok(JunctionCheck::Smooth { point: p, kink });
            }
            let tau = density.interface_normal(p).expect("piecewise density has a normal").perp();
            // Directions pointing away from the junction into each piece.
            let d_in = -j.tangent_in;
            let d_out = j.tangent_out;
            let s_in = classify(density, &boundary.pieces[j.incoming]);
            let s_out = classify(density, &boundary.pieces[j.outgoing]);
            use Side::*;
            let (low, high) = match (s_in, s_out) {
                (Low | OnInterface, High) => (d_in, d_out),
                (High, Low | OnInterface) => (d_out, d_in),
                (OnInterface, Low) | (Low, OnInterface) => {
                    let (along, off) = if s_in == OnInterface { (d_in, d_out) } else { (d_out, d_in) };
                    let angle = angle_between(-along, off);
                    let check = tangential_bound_check(f_lo, f_lo, angle.min(0.5 * PI), tol)?;
                    return Ok(JunctionCheck::Contact { point: p, f_minus: f_lo, f_i: f_lo, angle, check });
                }
                _ => return Ok(JunctionCheck::Smooth { point: p, kink }),
            };
            let corner = CornerSample::new(p, f_lo, f_hi, angle_between(high, tau), angle_between(-low, tau))?;
            Ok(JunctionCheck::Refraction { corner, residual: snell_residual(&corner)? })
        })
        .collect()
}

/// Samples of a curve with the inward (left) unit normal, signed curvature
/// and ∇ log f at each point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub points: Vec<Point>,
    pub normals: Vec<Point>,
    pub curvatures: Vec<f64>,
    pub log_gradients: Vec<Point>,
}

fn circumcurvature(a: Point, b: Point, c: Point) -> f64 {
    let denom = a.distance(b) * b.distance(c) * c.distance(a);
    if denom == 0.0 {
        return 0.0;
    }
    2.0 * (b - a).cross(c - b) / denom
}

impl CurveSample {
    /// Builds samples from a polyline traversed counterclockwise (or, for an
    /// open curve, with the region on its left). Open curves lose their two
    /// end points, which have no three-point stencil.
    pub fn from_points(points: &[Point], density: &Density, closed: bool) -> Result<Self> {
        let n = points.len();
        if n < 5 {
            return Err(Error::InsufficientPoints { required: 5, got: n });
        }
        let range: Vec<usize> = if closed { (0..n).collect() } else { (1..n - 1).collect() };
        let mut out = CurveSample {
            points: Vec::with_capacity(range.len()),
            normals: Vec::with_capacity(range.len()),
            curvatures: Vec::with_capacity(range.len()),
            log_gradients: Vec::with_capacity(range.len()),
        };
        for i in range {
            let a = points[(i + n - 1) % n];
            let b = points[i];
            let c = points[(i + 1) % n];
            out.points.push(b);
            out.normals.push((c - a).normalized().perp());
            out.curvatures.push(circumcurvature(a, b, c));
            out.log_gradients.push(density.log_gradient(b));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub values: Vec<f64>,
    pub mean: f64,
    pub max_deviation: f64,
    pub constant: bool,
}

/// H_ψ = H_Σ − ⟨∇ψ, ν⟩ at every sample, with ν the inward normal.
pub fn generalized_curvature(curve: &CurveSample, tol: f64) -> Result<CurvatureReport> {
    let n = curve.points.len();
    if n < 3 || curve.normals.len() != n || curve.curvatures.len() != n || curve.log_gradients.len() != n {
        return Err(Error::InsufficientPoints { required: 3, got: n });
    }
    let values: Vec<f64> = (0..n)
        .map(|i| curve.curvatures[i] - curve.log_gradients[i].dot(curve.normals[i]))
        .collect();
    let mean = values.iter().sum::<f64>() / n as f64;
    let max_deviation = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
    Ok(CurvatureReport { constant: max_deviation < tol * (1.0 + mean.abs()), values, mean, max_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snell_examples() {
        let c = CornerSample::new(Point::ORIGIN, 1.0, 1.0, 0.7, 0.7).unwrap();
        assert!(snell_residual(&c).unwrap().abs() < 1e-15);
        let c = CornerSample::new(Point::ORIGIN, 1.0, 2.0, PI / 3.0, 0.0).unwrap();
        assert!(snell_residual(&c).unwrap().abs() < 1e-15);
        let c = CornerSample::new(Point::ORIGIN, 1.0, 2.0, 0.5 * PI, 0.5 * PI).unwrap();
        assert_eq!(snell_residual(&c).unwrap(), 0.0);
        assert!(CornerSample::new(Point::ORIGIN, 2.0, 1.0, 0.1, 0.1).is_err());
        assert!(CornerSample::new(Point::ORIGIN, 1.0, 2.0, -0.1, 0.1).is_err());
    }

    #[test]
    fn sine_form_agrees() {
        let (a_minus, f_minus, f_plus): (f64, f64, f64) = (0.4, 1.0, 3.0);
        let a_plus = (f_minus / f_plus * a_minus.cos()).acos();
        let r = snell_residual_sine(f_minus, f_plus, 0.5 * PI - a_plus, 0.5 * PI - a_minus);
        assert!(r.abs() < 1e-15);
        let c = CornerSample::new(Point::ORIGIN, f_minus, f_plus, a_plus, a_minus).unwrap();
        assert!(snell_residual(&c).unwrap().abs() < 1e-15);
    }

    #[test]
    fn bound_examples() {
        let b = tangential_bound_check(1.0, 2.0, PI / 3.0, 1e-12).unwrap();
        assert!(b.pass && b.margin.abs() < 1e-15);
        assert!(!tangential_bound_check(1.0, 2.0, 0.5 * PI, 1e-12).unwrap().pass);
        assert!(tangential_bound_check(1.0, 1.0, 0.0, 1e-12).unwrap().pass);
    }

    #[test]
    fn circle_curvature() {
        let pts: Vec<Point> = (0..200).map(|k| Point::polar(2.0 * PI * k as f64 / 200.0) * 2.0).collect();
        let c = CurveSample::from_points(&pts, &Density::constant(1.0).unwrap(), true).unwrap();
        let r = generalized_curvature(&c, CONSTANCY_TOL).unwrap();
        assert!((r.mean - 0.5).abs() < 1e-12 && r.constant);
    }
}
