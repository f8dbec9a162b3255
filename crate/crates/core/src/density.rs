//! Planar densities: piecewise-constant kinds with a jump interface Γ, and
//! the smooth kinds used for the Gauss-type and calibration examples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::special::gamma;

/// Distance below which a point counts as lying on the jump interface.
pub const INTERFACE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    Strip,
    Ball,
    Line,
    HalfSpace,
    GaussMod,
    Cone,
    Constant,
}

impl DensityKind {
    pub fn name(self) -> &'static str {
        match self {
            DensityKind::Strip => "strip",
            DensityKind::Ball => "ball",
            DensityKind::Line => "line",
            DensityKind::HalfSpace => "half-space",
            DensityKind::GaussMod => "gauss-mod",
            DensityKind::Cone => "cone",
            DensityKind::Constant => "constant",
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A planar density as a value record.
///
/// - `Strip`: 1 on |y| ≤ 1, λ elsewhere.
/// - `Ball`: λ inside the unit disk, 1 outside, min{1, λ} on the circle.
/// - `Line`: 1 on the x axis, λ elsewhere.
/// - `HalfSpace`: 1 on y ≤ 0, λ on y > 0.
/// - `GaussMod`: exp(−|x|ᵖ − |y|^q), with (p, q) = (2, 4) as the default.
/// - `Cone`: the distance to the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DensityRecord", into = "DensityRecord")]
pub enum Density {
    Strip { lambda: f64 },
    Ball { lambda: f64 },
    Line { lambda: f64 },
    HalfSpace { lambda: f64 },
    GaussMod { exponents: [f64; 2] },
    Cone,
    Constant { value: f64 },
}

fn check_above_one(kind: &str, lambda: f64) -> Result<f64> {
    if lambda.is_finite() && lambda > 1.0 {
        Ok(lambda)
    } else {
        Err(Error::domain(format!("{kind} density needs lambda > 1, got {lambda}")))
    }
}

impl Density {
    pub fn strip(lambda: f64) -> Result<Self> {
        check_above_one("strip", lambda).map(|lambda| Density::Strip { lambda })
    }

    pub fn ball(lambda: f64) -> Result<Self> {
        if lambda.is_finite() && lambda > 0.0 && lambda != 1.0 {
            Ok(Density::Ball { lambda })
        } else {
            Err(Error::domain(format!("ball density needs lambda > 0, lambda != 1, got {lambda}")))
        }
    }

    pub fn line(lambda: f64) -> Result<Self> {
        check_above_one("line", lambda).map(|lambda| Density::Line { lambda })
    }

    pub fn half_space(lambda: f64) -> Result<Self> {
        check_above_one("half-space", lambda).map(|lambda| Density::HalfSpace { lambda })
    }

    /// exp(−x² − y⁴).
    pub fn gauss_mod() -> Self {
        Density::GaussMod { exponents: [2.0, 4.0] }
    }

    pub fn gauss_with_exponents(p: f64, q: f64) -> Result<Self> {
        if p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite() {
            Ok(Density::GaussMod { exponents: [p, q] })
        } else {
            Err(Error::domain(format!("gauss-mod exponents must be positive, got ({p}, {q})")))
        }
    }

    pub fn constant(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Density::Constant { value })
        } else {
            Err(Error::domain(format!("constant density must be positive, got {value}")))
        }
    }

    pub fn kind(&self) -> DensityKind {
        match self {
            Density::Strip { .. } => DensityKind::Strip,
            Density::Ball { .. } => DensityKind::Ball,
            Density::Line { .. } => DensityKind::Line,
            Density::HalfSpace { .. } => DensityKind::HalfSpace,
            Density::GaussMod { .. } => DensityKind::GaussMod,
            Density::Cone => DensityKind::Cone,
            Density::Constant { .. } => DensityKind::Constant,
        }
    }

    pub fn lambda(&self) -> Option<f64> {
        match *self {
            Density::Strip { lambda }
            | Density::Ball { lambda }
            | Density::Line { lambda }
            | Density::HalfSpace { lambda } => Some(lambda),
            _ => None,
        }
    }

    pub fn is_piecewise_constant(&self) -> bool {
        self.lambda().is_some()
    }

    /// Euclidean distance from `p` to Γ; `None` for smooth kinds.
    pub fn interface_distance(&self, p: Point) -> Option<f64> {
        match self {
            Density::Strip { .. } => Some((p.y.abs() - 1.0).abs()),
            Density::Ball { .. } => Some((p.norm() - 1.0).abs()),
            Density::Line { .. } | Density::HalfSpace { .. } => Some(p.y.abs()),
            _ => None,
        }
    }

    /// Unit normal of Γ at (or near) `p`, oriented toward the side whose
    /// limit value is larger. For the line density both sides carry λ and
    /// the normal is the upward one.
    pub fn interface_normal(&self, p: Point) -> Option<Point> {
        match *self {
            Density::Strip { .. } => Some(Point::new(0.0, if p.y >= 0.0 { 1.0 } else { -1.0 })),
            Density::Ball { lambda } => {
                let radial = p.normalized();
                Some(if lambda > 1.0 { -radial } else { radial })
            }
            Density::Line { .. } | Density::HalfSpace { .. } => Some(Point::new(0.0, 1.0)),
            _ => None,
        }
    }

    pub fn evaluate(&self, p: Point) -> f64 {
        match *self {
            Density::Strip { lambda } => {
                if p.y.abs() <= 1.0 + INTERFACE_TOL {
                    1.0
                } else {
                    lambda
                }
            }
            Density::Ball { lambda } => {
                let r = p.norm();
                if (r - 1.0).abs() <= INTERFACE_TOL {
                    lambda.min(1.0)
                } else if r < 1.0 {
                    lambda
                } else {
                    1.0
                }
            }
            Density::Line { lambda } => {
                if p.y.abs() <= INTERFACE_TOL {
                    1.0
                } else {
                    lambda
                }
            }
            Density::HalfSpace { lambda } => {
                if p.y <= INTERFACE_TOL {
                    1.0
                } else {
                    lambda
                }
            }
            Density::GaussMod { exponents: [a, b] } => (-p.x.abs().powf(a) - p.y.abs().powf(b)).exp(),
            Density::Cone => p.norm(),
            Density::Constant { value } => value,
        }
    }

    /// The two one-sided limits of the density at a point of Γ, as
    /// `(f_minus, f_plus)` with `f_minus ≤ f_plus`.
    pub fn side_limits(&self, p: Point, normal: Point) -> Result<(f64, f64)> {
        let distance = self
            .interface_distance(p)
            .ok_or_else(|| Error::domain(format!("{} density has no jump interface", self.kind())))?;
        if distance > INTERFACE_TOL {
            return Err(Error::PointNotOnInterface { x: p.x, y: p.y, distance });
        }
        let gamma_normal = self.interface_normal(p).expect("piecewise density has a normal");
        if normal.dot(gamma_normal).abs() <= INTERFACE_TOL * normal.norm() {
            return Err(Error::domain("normal direction is tangent to the interface"));
        }
        let lambda = self.lambda().expect("piecewise density has lambda");
        Ok((lambda.min(1.0), lambda.max(1.0)))
    }

    /// ∇ log f. Zero away from Γ for the piecewise-constant kinds.
    pub fn log_gradient(&self, p: Point) -> Point {
        match *self {
            Density::GaussMod { exponents: [a, b] } => Point::new(
                -a * p.x.abs().powf(a - 1.0) * p.x.signum(),
                -b * p.y.abs().powf(b - 1.0) * p.y.signum(),
            ),
            Density::Cone => {
                let r2 = p.dot(p);
                Point::new(p.x / r2, p.y / r2)
            }
            _ => Point::ORIGIN,
        }
    }

    /// Total weighted mass of the plane; infinite except for gauss-mod.
    pub fn total_mass(&self) -> f64 {
        match *self {
            // ∫ e^{−|t|ᵖ} dt = 2 Γ(1 + 1/p)
            Density::GaussMod { exponents: [a, b] } => 4.0 * gamma(1.0 + 1.0 / a) * gamma(1.0 + 1.0 / b),
            _ => f64::INFINITY,
        }
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Density::GaussMod { exponents: [a, b] } => write!(f, "gauss-mod(exp(-|x|^{a} - |y|^{b}))"),
            Density::Cone => f.write_str("cone"),
            Density::Constant { value } => write!(f, "constant({value})"),
            _ => write!(f, "{}(lambda={})", self.kind(), self.lambda().unwrap_or(f64::NAN)),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DensityParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

/// Wire form `{kind, lambda, params}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityRecord {
    pub kind: DensityKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default)]
    pub params: DensityParams,
}

impl From<Density> for DensityRecord {
    fn from(d: Density) -> Self {
        let mut params = DensityParams::default();
        match d {
            Density::GaussMod { exponents } => params.exponents = Some(exponents),
            Density::Constant { value } => params.value = Some(value),
            _ => {}
        }
        DensityRecord { kind: d.kind(), lambda: d.lambda(), params }
    }
}

impl TryFrom<DensityRecord> for Density {
    type Error = Error;

    fn try_from(r: DensityRecord) -> Result<Self> {
        let need_lambda = || {
            r.lambda
                .ok_or_else(|| Error::InvalidSpec(format!("{} density requires lambda", r.kind)))
        };
        match r.kind {
            DensityKind::Strip => Density::strip(need_lambda()?),
            DensityKind::Ball => Density::ball(need_lambda()?),
            DensityKind::Line => Density::line(need_lambda()?),
            DensityKind::HalfSpace => Density::half_space(need_lambda()?),
            DensityKind::GaussMod => {
                let [p, q] = r.params.exponents.unwrap_or([2.0, 4.0]);
                Density::gauss_with_exponents(p, q)
            }
            DensityKind::Cone => Ok(Density::Cone),
            DensityKind::Constant => Density::constant(r.params.value.unwrap_or(1.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{integrate_to_infinity, Tolerance};
    use std::f64::consts::PI;

    #[test]
    fn region_values() {
        let s = Density::strip(2.0).unwrap();
        assert_eq!(s.evaluate(Point::new(0.0, 0.0)), 1.0);
        assert_eq!(s.evaluate(Point::new(0.0, 2.0)), 2.0);
        assert_eq!(s.evaluate(Point::new(3.0, 1.0)), 1.0);
        let b = Density::ball(0.5).unwrap();
        let on = Point::polar(0.7);
        assert_eq!(b.evaluate(on), 0.5);
        assert_eq!(b.evaluate(on * 0.5), 0.5);
        assert_eq!(b.evaluate(on * 1.5), 1.0);
        let h = Density::half_space(3.0).unwrap();
        assert_eq!(h.evaluate(Point::new(1.0, 0.0)), 1.0);
        assert_eq!(h.evaluate(Point::new(1.0, 1e-6)), 3.0);
    }

    #[test]
    fn side_limit_examples() {
        let s = Density::strip(2.0).unwrap();
        assert_eq!(s.side_limits(Point::new(0.0, 1.0), Point::new(0.0, 1.0)).unwrap(), (1.0, 2.0));
        let b = Density::ball(3.0).unwrap();
        assert_eq!(b.side_limits(Point::new(1.0, 0.0), Point::new(1.0, 0.0)).unwrap(), (1.0, 3.0));
        let l = Density::line(5.0).unwrap();
        assert_eq!(l.side_limits(Point::new(0.3, 0.0), Point::new(0.0, -1.0)).unwrap(), (1.0, 5.0));
    }

    #[test]
    fn side_limits_reject_off_interface_and_tangent_normals() {
        let s = Density::strip(2.0).unwrap();
        assert!(matches!(
            s.side_limits(Point::new(0.0, 1.1), Point::new(0.0, 1.0)),
            Err(Error::PointNotOnInterface { .. })
        ));
        assert!(s.side_limits(Point::new(0.0, 1.0), Point::new(1.0, 0.0)).is_err());
        assert!(Density::gauss_mod().side_limits(Point::ORIGIN, Point::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn constructors_validate_lambda() {
        assert!(Density::strip(1.0).is_err());
        assert!(Density::line(0.5).is_err());
        assert!(Density::ball(1.0).is_err());
        assert!(Density::ball(-2.0).is_err());
        assert!(Density::ball(0.3).is_ok());
        assert!(Density::constant(0.0).is_err());
    }

    #[test]
    fn gauss_mass_against_quadrature() {
        let oracle = PI.sqrt()
            * 2.0
            * integrate_to_infinity(|y| (-y.powi(4)).exp(), 0.0, Tolerance::new(1e-15, 1e-14))
                .unwrap()
                .value;
        let m = Density::gauss_mod().total_mass();
        assert!((m - oracle).abs() / oracle < 1e-12, "{m} vs {oracle}");
        assert!(Density::strip(2.0).unwrap().total_mass().is_infinite());
    }

    #[test]
    fn json_round_trip() {
        for d in [
            Density::strip(2.0).unwrap(),
            Density::ball(0.5).unwrap(),
            Density::gauss_mod(),
            Density::Cone,
            Density::constant(2.5).unwrap(),
        ] {
            let s = serde_json::to_string(&d).unwrap();
            let back: Density = serde_json::from_str(&s).unwrap();
            assert_eq!(back, d);
        }
        let bad = serde_json::from_str::<Density>(r#"{"kind":"strip","lambda":0.5}"#);
        assert!(bad.is_err());
        let parsed: Density = serde_json::from_str(r#"{"kind":"half-space","lambda":4}"#).unwrap();
        assert_eq!(parsed, Density::half_space(4.0).unwrap());
    }
}
