//! Candidate profiles for the strip density (1 on |y| ≤ 1, λ > 1 outside)
//! and for the line density (1 on the x axis, λ elsewhere).
//!
//! Families:
//! - (i) a round disk inside the strip, area v ≤ π;
//! - (ii) a slab of the strip capped by two unit half-disks, area v ≥ π;
//! - (iii) a set resting on one edge of the strip, bounded by a segment of
//!   that edge, two arcs inside the strip and one cap outside it;
//! - (iv) a set symmetric about the x axis, bounded by two arcs crossing the
//!   strip and a cap beyond each edge.
//!
//! Families (iii) and (iv) are parametrized by their curvature h ∈ (0, 1].

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boundary::{Boundary, Piece};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::{bisect, golden_section, linspace, scan_minimize, Minimum};
use crate::profile::{CrossoverReport, ProfileCurve, ProfilePoint};
use crate::special::arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripFamily {
    I,
    II,
    III,
    IV,
}

impl StripFamily {
    pub fn name(self) -> &'static str {
        match self {
            StripFamily::I => "i",
            StripFamily::II => "ii",
            StripFamily::III => "iii",
            StripFamily::IV => "iv",
        }
    }
}

impl fmt::Display for StripFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lower end of the curvature range scanned when inverting areas. Areas
/// grow like 1/h as h → 0.
pub const H_MIN: f64 = 1e-4;

/// Nodes in the curvature scan used by [`AreaInverter`].
pub const SCAN_NODES: usize = 2048;

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("strip density needs lambda > 1, got {lambda}")))
    }
}

fn check_h(h: f64) -> Result<()> {
    if h > 0.0 && h <= 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("curvature h = {h} outside (0, 1]")))
    }
}

/// Perimeter of the disk of area `v` inside the strip.
pub fn profile_i(v: f64) -> Result<f64> {
    if v > 0.0 && v <= PI {
        Ok(2.0 * (PI * v).sqrt())
    } else {
        Err(Error::domain(format!("family i needs 0 < v <= pi, got {v}")))
    }
}

/// Perimeter of the capped slab of area `v`.
pub fn profile_ii(v: f64) -> Result<f64> {
    if v >= PI && v.is_finite() {
        Ok(v + PI)
    } else {
        Err(Error::domain(format!("family ii needs v >= pi, got {v}")))
    }
}

/// (α, β) for family iii: β = π − 2 asin √h is the angle of the inner arcs
/// at the far edge, α = acos(cos β / λ) the cap half-angle.
pub fn angles_iii(h: f64, lambda: f64) -> Result<(f64, f64)> {
    check_h(h)?;
    check_lambda(lambda)?;
    let beta = PI - 2.0 * h.sqrt().asin();
    Ok(((beta.cos() / lambda).acos(), beta))
}

/// (α̂, β̂) for family iv: β̂ = π/2 − asin h, α̂ = acos(cos β̂ / λ).
pub fn angles_iv(h: f64, lambda: f64) -> Result<(f64, f64)> {
    check_h(h)?;
    check_lambda(lambda)?;
    let beta = 0.5 * PI - h.asin();
    Ok(((beta.cos() / lambda).acos(), beta))
}

pub fn profile_iii(h: f64, lambda: f64) -> Result<ProfilePoint> {
    let (alpha, beta) = angles_iii(h, lambda)?;
    let (sa, ca) = alpha.sin_cos();
    let cb = beta.cos();
    let s = h.sqrt().asin();
    let w = (h * (1.0 - h)).sqrt();
    let perimeter = 2.0 * lambda * alpha / h + 4.0 * s / h + 2.0 * sa / h - 4.0 * w / h;
    let area = (lambda * alpha - sa * cb) / (h * h) + 2.0 * (s - w) / (h * h) + 4.0 * sa / h
        - 4.0 * (1.0 - h).sqrt() / h.sqrt();
    debug_assert!((cb - lambda * ca).abs() < 1e-12);
    Ok(ProfilePoint::new(h, area, perimeter))
}

pub fn profile_iv(h: f64, lambda: f64) -> Result<ProfilePoint> {
    let (alpha, beta) = angles_iv(h, lambda)?;
    let sa = alpha.sin();
    let cb = beta.cos();
    let s = h.asin();
    let perimeter = 4.0 * lambda * alpha / h + 4.0 * s / h;
    let area = 4.0 * sa / h
        + 2.0 * (lambda * alpha - sa * cb) / (h * h)
        + 2.0 * (s - h * (1.0 - h * h).sqrt()) / (h * h);
    Ok(ProfilePoint::new(h, area, perimeter))
}

/// Area/perimeter of a curvature-parametrized family.
pub fn profile_curved(family: StripFamily, h: f64, lambda: f64) -> Result<ProfilePoint> {
    match family {
        StripFamily::III => profile_iii(h, lambda),
        StripFamily::IV => profile_iv(h, lambda),
        _ => Err(Error::domain(format!("family {family} is not parametrized by curvature"))),
    }
}

/// Which monotone piece of the area map a root lies on. `Descending` is the
/// main branch, where area decreases as the curvature grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Descending,
    Ascending,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaRoot {
    pub h: f64,
    pub branch: Branch,
    pub perimeter: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct MonotonePiece {
    h: (f64, f64),
    area: (f64, f64),
}

/// The area map h ↦ A(h) of family iii or iv split into monotone pieces,
/// ready to be inverted at many volumes.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaInverter {
    pub family: StripFamily,
    pub lambda: f64,
    pieces: Vec<MonotonePiece>,
}

impl AreaInverter {
    pub fn new(family: StripFamily, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        if !matches!(family, StripFamily::III | StripFamily::IV) {
            return Err(Error::domain(format!("family {family} has no curvature parameter")));
        }
        let area = |h: f64| profile_curved(family, h, lambda).map(|p| p.area);
        let grid = linspace(H_MIN, 1.0, SCAN_NODES);
        let values = grid.iter().map(|&h| area(h)).collect::<Result<Vec<_>>>()?;
        let mut breaks = vec![H_MIN];
        for k in 1..SCAN_NODES - 1 {
            let left = values[k] - values[k - 1];
            let right = values[k + 1] - values[k];
            if left * right < 0.0 {
                let sign = if left < 0.0 { 1.0 } else { -1.0 };
                let m = golden_section(
                    |h| sign * area(h).unwrap_or(f64::INFINITY),
                    grid[k - 1],
                    grid[k + 1],
                    1e-14,
                );
                breaks.push(m.x);
            }
        }
        breaks.push(1.0);
        let pieces = breaks
            .windows(2)
            .map(|w| Ok(MonotonePiece { h: (w[0], w[1]), area: (area(w[0])?, area(w[1])?) }))
            .collect::<Result<Vec<_>>>()?;
        Ok(AreaInverter { family, lambda, pieces })
    }

    /// Smallest area attained on the scanned range.
    pub fn min_area(&self) -> f64 {
        self.pieces
            .iter()
            .flat_map(|p| [p.area.0, p.area.1])
            .fold(f64::INFINITY, f64::min)
    }

    /// Curvatures of the interior extrema of the area map.
    pub fn turning_points(&self) -> Vec<f64> {
        self.pieces.iter().skip(1).map(|p| p.h.0).collect()
    }

    /// Every h with A(h) = v, sorted by h.
    pub fn roots(&self, v: f64) -> Result<Vec<AreaRoot>> {
        let mut out: Vec<AreaRoot> = Vec::new();
        for piece in &self.pieces {
            let (a0, a1) = piece.area;
            if !(v >= a0.min(a1) && v <= a0.max(a1)) {
                continue;
            }
            let branch = if a1 < a0 { Branch::Descending } else { Branch::Ascending };
            let root = bisect(
                |h| profile_curved(self.family, h, self.lambda).map(|p| p.area - v).unwrap_or(f64::NAN),
                piece.h.0,
                piece.h.1,
                1e-15,
                1e-13 * v.abs().max(1.0),
            )?;
            if out.last().is_some_and(|r| (r.h - root.x).abs() < 1e-12) {
                continue;
            }
            let perimeter = profile_curved(self.family, root.x, self.lambda)?.perimeter;
            out.push(AreaRoot { h: root.x, branch, perimeter });
        }
        Ok(out)
    }

    /// The root with the least perimeter, if the area is attainable.
    pub fn best(&self, v: f64) -> Result<Option<AreaRoot>> {
        Ok(self
            .roots(v)?
            .into_iter()
            .min_by(|a, b| a.perimeter.total_cmp(&b.perimeter)))
    }
}

/// All curvatures h ∈ [10⁻⁴, 1] at which family iii or iv encloses area `v`.
/// Unattainable areas give an empty list.
pub fn invert_area(family: StripFamily, lambda: f64, v: f64) -> Result<Vec<AreaRoot>> {
    AreaInverter::new(family, lambda)?.roots(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BestProfile {
    pub family: StripFamily,
    pub h: Option<f64>,
    pub perimeter: f64,
}

/// Least perimeter among all strip candidates at area `v`.
pub struct StripComparator {
    lambda: f64,
    iii: AreaInverter,
    iv: AreaInverter,
}

impl StripComparator {
    pub fn new(lambda: f64) -> Result<Self> {
        Ok(StripComparator {
            lambda,
            iii: AreaInverter::new(StripFamily::III, lambda)?,
            iv: AreaInverter::new(StripFamily::IV, lambda)?,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Best of families iii and iv at area `v`.
    pub fn best_curved(&self, v: f64) -> Result<Option<BestProfile>> {
        let a = self.iii.best(v)?.map(|r| (StripFamily::III, r));
        let b = self.iv.best(v)?.map(|r| (StripFamily::IV, r));
        Ok([a, b]
            .into_iter()
            .flatten()
            .min_by(|x, y| x.1.perimeter.total_cmp(&y.1.perimeter))
            .map(|(family, r)| BestProfile { family, h: Some(r.h), perimeter: r.perimeter }))
    }

    pub fn best(&self, v: f64) -> Result<BestProfile> {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::domain(format!("area must be positive, got {v}")));
        }
        let mut best = if v <= PI {
            BestProfile { family: StripFamily::I, h: None, perimeter: profile_i(v)? }
        } else {
            BestProfile { family: StripFamily::II, h: None, perimeter: profile_ii(v)? }
        };
        if let Some(c) = self.best_curved(v)? {
            if c.perimeter < best.perimeter {
                best = c;
            }
        }
        Ok(best)
    }
}

pub fn best_profile(v: f64, lambda: f64) -> Result<BestProfile> {
    StripComparator::new(lambda)?.best(v)
}

/// First area above π at which the best of families iii and iv stops being
/// worse than family ii.
pub fn crossover_v0(lambda: f64) -> Result<CrossoverReport> {
    let cmp = StripComparator::new(lambda)?;
    // Positive while family ii is strictly better; unattainable areas count
    // as a large positive gap.
    let gap = |v: f64| -> f64 {
        match cmp.best_curved(v) {
            Ok(Some(b)) => b.perimeter - (v + PI),
            _ => f64::MAX,
        }
    };
    let mut lo = PI;
    let mut hi = PI;
    let mut found = false;
    for _ in 0..2000 {
        hi = lo * 1.05;
        if gap(hi) <= 0.0 {
            found = true;
            break;
        }
        lo = hi;
    }
    if !found {
        return Err(Error::convergence(2000, format!("no crossover below area {hi} for lambda {lambda}")));
    }
    let root = bisect(gap, lo, hi, 1e-15, 1e-10).map_err(|e| match e {
        Error::NoRoot(m) => Error::convergence(0, m),
        other => other,
    })?;
    let winner = cmp
        .best_curved(root.x)?
        .map(|b| b.family.name().to_string())
        .unwrap_or_else(|| "iii".into());
    Ok(CrossoverReport {
        pair: ("ii".into(), winner),
        lambda: Some(lambda),
        bracket: (lo, hi),
        volume: root.x,
        residual: root.residual,
        iterations: root.iterations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IvScanPoint {
    pub h: f64,
    pub area: f64,
    pub perimeter_iv: f64,
    /// Least family-iii perimeter at the same area, if attainable.
    pub perimeter_iii: Option<f64>,
}

impl IvScanPoint {
    pub fn margin(&self) -> Option<f64> {
        self.perimeter_iii.map(|p| self.perimeter_iv - p)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IvScanReport {
    pub lambda: f64,
    pub points: Vec<IvScanPoint>,
    /// Grid points where family iv is not strictly worse than family iii.
    pub violations: usize,
    /// Grid points whose area family iii cannot attain.
    pub uncomparable: usize,
    pub min_margin: f64,
}

/// Compares family iv against family iii at equal area on a curvature grid.
pub fn iv_dominance_scan(lambda: f64, h_grid: &[f64]) -> Result<IvScanReport> {
    let iii = AreaInverter::new(StripFamily::III, lambda)?;
    let mut points = Vec::with_capacity(h_grid.len());
    for &h in h_grid {
        let p = profile_iv(h, lambda)?;
        let perimeter_iii = iii.best(p.area)?.map(|r| r.perimeter);
        points.push(IvScanPoint { h, area: p.area, perimeter_iv: p.perimeter, perimeter_iii });
    }
    let violations = points.iter().filter(|p| p.margin().is_some_and(|m| m <= 0.0)).count();
    let uncomparable = points.iter().filter(|p| p.perimeter_iii.is_none()).count();
    let min_margin = points.iter().filter_map(IvScanPoint::margin).fold(f64::INFINITY, f64::min);
    Ok(IvScanReport { lambda, points, violations, uncomparable, min_margin })
}

/// 2 arc(x) − arc(2x).
pub fn arc_gap(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("arc gap needs x >= 0, got {x}")));
    }
    Ok(2.0 * arc(x)? - arc(2.0 * x)?)
}

/// Minimum of [`arc_gap`] over [π/32, π/2].
pub fn arc_gap_min() -> Result<Minimum> {
    // arc is finite and smooth on this range; a failure here is a bug
    let f = |x: f64| arc_gap(x).expect("arc gap on a positive argument");
    Ok(scan_minimize(f, PI / 32.0, PI / 2.0, 512, 1e-10))
}

/// Contact angle of the unit disk cut by the x axis under the line density.
pub fn line_alpha(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok((1.0 / lambda).acos())
}

/// P²/A of the line-density candidate: the unit disk whose boundary meets
/// the axis at angle acos(1/λ), cut along the axis.
pub fn line_density_ratio(lambda: f64) -> Result<f64> {
    let a = line_alpha(lambda)?;
    let (s, c) = a.sin_cos();
    let num = (PI - a) * lambda + s;
    Ok(4.0 * num * num / (lambda * (PI - a + s * c)))
}

/// Weighted area and perimeter of the unit-radius line-density candidate.
pub fn line_candidate(lambda: f64) -> Result<ProfilePoint> {
    let a = line_alpha(lambda)?;
    let (s, c) = a.sin_cos();
    Ok(ProfilePoint::new(1.0, lambda * (PI - a + s * c), 2.0 * ((PI - a) * lambda + s)))
}

pub fn line_boundary(lambda: f64) -> Result<Boundary> {
    let a = line_alpha(lambda)?;
    let (s, c) = a.sin_cos();
    Boundary::new(vec![
        Piece::segment(Point::new(-s, 0.0), Point::new(s, 0.0)),
        Piece::arc(Point::new(0.0, c), 1.0, a - 0.5 * PI, 2.0 * (PI - a)),
    ])
}

pub fn boundary_i(v: f64) -> Result<Boundary> {
    profile_i(v)?;
    Boundary::new(vec![Piece::arc(Point::ORIGIN, (v / PI).sqrt(), -0.5 * PI, 2.0 * PI)])
}

pub fn boundary_ii(v: f64) -> Result<Boundary> {
    profile_ii(v)?;
    let w = 0.25 * (v - PI);
    let mut pieces = Vec::new();
    if w > 0.0 {
        pieces.push(Piece::segment(Point::new(-w, -1.0), Point::new(w, -1.0)));
    }
    pieces.push(Piece::arc(Point::new(w, 0.0), 1.0, -0.5 * PI, PI));
    if w > 0.0 {
        pieces.push(Piece::segment(Point::new(w, 1.0), Point::new(-w, 1.0)));
    }
    pieces.push(Piece::arc(Point::new(-w, 0.0), 1.0, 0.5 * PI, PI));
    Boundary::new(pieces)
}

/// Family iii resting on y = −1 with its cap above y = 1.
pub fn boundary_iii(h: f64, lambda: f64) -> Result<Boundary> {
    let (alpha, beta) = angles_iii(h, lambda)?;
    let r = 1.0 / h;
    let c = r * (alpha.sin() - beta.sin());
    let phi = PI - beta;
    let mut pieces = Vec::new();
    if c > 0.0 {
        pieces.push(Piece::segment(Point::new(-c, -1.0), Point::new(c, -1.0)));
    }
    pieces.push(Piece::arc(Point::new(c, r - 1.0), r, -0.5 * PI, phi));
    pieces.push(Piece::arc(Point::new(0.0, 1.0 - r * alpha.cos()), r, 0.5 * PI - alpha, 2.0 * alpha));
    pieces.push(Piece::arc(Point::new(-c, r - 1.0), r, 1.5 * PI - phi, phi));
    Boundary::new(pieces)
}

pub fn boundary_iv(h: f64, lambda: f64) -> Result<Boundary> {
    let (alpha, _) = angles_iv(h, lambda)?;
    let r = 1.0 / h;
    let s = h.asin();
    let d = r * alpha.sin() - r * s.cos();
    let cap = r * alpha.cos();
    Boundary::new(vec![
        Piece::arc(Point::new(d, 0.0), r, -s, 2.0 * s),
        Piece::arc(Point::new(0.0, 1.0 - cap), r, 0.5 * PI - alpha, 2.0 * alpha),
        Piece::arc(Point::new(-d, 0.0), r, PI - s, 2.0 * s),
        Piece::arc(Point::new(0.0, cap - 1.0), r, 1.5 * PI - alpha, 2.0 * alpha),
    ])
}

/// Family iii over a curvature grid, for the plot showing area and
/// perimeter turning around near h = 1 when λ is close to 1.
pub fn reversing_curve(lambda: f64, h_from: f64, h_to: f64, samples: usize) -> Result<ProfileCurve> {
    let points = linspace(h_from, h_to, samples)
        .into_iter()
        .map(|h| profile_iii(h, lambda))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProfileCurve { family: "iii".into(), lambda, points })
}

/// Profile curves of all four families up to area `v_max`.
pub fn strip_curves(lambda: f64, samples: usize, v_max: f64) -> Result<Vec<ProfileCurve>> {
    check_lambda(lambda)?;
    if samples < 2 {
        return Err(Error::domain("at least two samples are needed"));
    }
    if !(v_max > PI) {
        return Err(Error::domain(format!("v_max must exceed pi, got {v_max}")));
    }
    let i = linspace(PI / samples as f64, PI, samples)
        .into_iter()
        .map(|v| Ok(ProfilePoint::new(v, v, profile_i(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let ii = linspace(PI, v_max, samples)
        .into_iter()
        .map(|v| Ok(ProfilePoint::new(v, v, profile_ii(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut curves = vec![
        ProfileCurve { family: "i".into(), lambda, points: i },
        ProfileCurve { family: "ii".into(), lambda, points: ii },
    ];
    for family in [StripFamily::III, StripFamily::IV] {
        let inv = AreaInverter::new(family, lambda)?;
        let h_lo = inv.roots(v_max)?.first().map_or(H_MIN, |r| r.h);
        let points = linspace(h_lo, 1.0, samples)
            .into_iter()
            .map(|h| profile_curved(family, h, lambda))
            .collect::<Result<Vec<_>>>()?;
        curves.push(ProfileCurve { family: family.name().into(), lambda, points });
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_i_and_ii_join_at_pi() {
        assert_eq!(profile_i(PI).unwrap(), 2.0 * PI);
        assert_eq!(profile_ii(PI).unwrap(), 2.0 * PI);
        assert!((profile_i(PI / 4.0).unwrap() - PI).abs() < 1e-15);
        assert!((profile_i(1.0).unwrap() - 2.0 * PI.sqrt()).abs() < 1e-15);
        assert_eq!(profile_ii(10.0).unwrap(), 10.0 + PI);
        assert!(profile_i(4.0).is_err());
        assert!(profile_ii(3.0).is_err());
    }

    #[test]
    fn iii_at_unit_curvature() {
        let p = profile_iii(1.0, 2.0).unwrap();
        let s3 = 3f64.sqrt();
        assert!((p.perimeter - (4.0 * PI / 3.0 + 2.0 * PI + s3)).abs() < 1e-13);
        assert!((p.area - ((2.0 * PI / 3.0 - s3 / 2.0) + PI + 2.0 * s3)).abs() < 1e-13);
    }

    #[test]
    fn iv_at_unit_curvature() {
        let p = profile_iv(1.0, 2.0).unwrap();
        assert!((p.perimeter - (8.0 * PI / 3.0 + 2.0 * PI)).abs() < 1e-13);
    }

    #[test]
    fn boundary_areas_match_euclidean_parts() {
        // Euclidean area plus the extra weight λ − 1 on the cap.
        for &h in &[0.2, 0.5, 0.9, 1.0] {
            let lambda = 2.0;
            let b = boundary_iii(h, lambda).unwrap();
            let (alpha, _) = angles_iii(h, lambda).unwrap();
            let r = 1.0 / h;
            let cap = r * r * (alpha - alpha.sin() * alpha.cos());
            let weighted = profile_iii(h, lambda).unwrap().area;
            assert!((b.enclosed_area() + (lambda - 1.0) * cap - weighted).abs() < 1e-10 * weighted);
        }
    }

    #[test]
    fn iv_boundary_is_symmetric() {
        let b = boundary_iv(0.5, 2.0).unwrap();
        let m = b.mirrored_y();
        assert!((m.enclosed_area() - b.enclosed_area()).abs() < 1e-12);
        let pts = b.sample(400);
        for p in &pts {
            let mirrored = Point::new(p.x, -p.y);
            let nearest = pts.iter().map(|q| q.distance(mirrored)).fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-12);
        }
    }

    #[test]
    fn unattainable_area_has_no_roots() {
        let inv = AreaInverter::new(StripFamily::III, 2.0).unwrap();
        assert!(inv.roots(inv.min_area() * 0.99).unwrap().is_empty());
        let big = inv.roots(200.0).unwrap();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].branch, Branch::Descending);
    }

    #[test]
    fn line_ratio_below_euclidean_bound() {
        for &l in &[1.01, 2.0, 10.0, 100.0] {
            assert!(line_density_ratio(l).unwrap() < 4.0 * PI * l);
        }
        let p = line_candidate(2.0).unwrap();
        assert!((p.isoperimetric_ratio() - line_density_ratio(2.0).unwrap()).abs() < 1e-12);
    }
}
