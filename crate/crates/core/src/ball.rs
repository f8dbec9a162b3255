//! Candidate profiles for the ball density: λ on the open unit disk B, 1
//! outside, min{1, λ} on ∂B.
//!
//! For λ > 1 the families are
//! - (a) a disk outside B;
//! - (b) a region inside B bounded by an arc of ∂B and an inner arc meeting
//!   ∂B at angle acos(1/λ);
//! - (big) a disk centered at the origin containing B.
//!
//! For λ < 1 they are
//! - (A) a disk inside B;
//! - (B) B together with an outer lens, bounded by an arc of ∂B and an
//!   external arc;
//! - (C) a disk meeting ∂B orthogonally.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boundary::{Boundary, Piece};
use crate::error::{Error, Result};
use crate::geometry::{segment_area_fn, segment_over_sin2, t_over_sin, Point};
use crate::numeric::{bisect, linspace, sign_changes};
use crate::profile::{CrossoverReport, ProfileCurve, ProfilePoint};

/// Grid size used to bracket crossovers before bisection.
pub const CROSSOVER_GRID: usize = 4096;

fn check_gt1(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("expected lambda > 1, got {lambda}")))
    }
}

fn check_lt1(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("expected 0 < lambda < 1, got {lambda}")))
    }
}

/// Perimeter of a disk of area `v` where the density is 1.
pub fn profile_a(v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(2.0 * (PI * v).sqrt())
    } else {
        Err(Error::domain(format!("area must be positive, got {v}")))
    }
}

/// Perimeter of the centered disk of weighted area `v ≥ λπ`.
pub fn profile_big(v: f64, lambda: f64) -> Result<f64> {
    check_gt1(lambda)?;
    if !(v >= lambda * PI) || !v.is_finite() {
        return Err(Error::domain(format!("family big needs v >= lambda*pi, got {v}")));
    }
    if v == lambda * PI {
        return Ok(2.0 * PI);
    }
    Ok(2.0 * PI * (v / PI + 1.0 - lambda).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeClass {
    Convex,
    Chord,
    Nonconvex,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeClass::Convex => "convex",
            ShapeClass::Chord => "chord",
            ShapeClass::Nonconvex => "nonconvex",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileB {
    pub point: ProfilePoint,
    pub shape: ShapeClass,
    /// Signed half-angle of the inner arc over its chord; zero for a chord.
    pub delta: f64,
}

/// Signed inner-arc half-angle δ = π − α − acos(1/λ) of family b.
pub fn b_delta(alpha: f64, lambda: f64) -> f64 {
    PI - alpha - (1.0 / lambda).acos()
}

const CHORD_TOL: f64 = 1e-12;

/// Family b with contact half-angle `alpha ∈ (0, π)`.
pub fn profile_b(alpha: f64, lambda: f64) -> Result<ProfileB> {
    check_gt1(lambda)?;
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::domain(format!("contact half-angle {alpha} outside (0, pi)")));
    }
    let delta = b_delta(alpha, lambda);
    let s = alpha.sin();
    let area = lambda * (segment_area_fn(alpha) + s * s * segment_over_sin2(delta));
    let perimeter = 2.0 * alpha + 2.0 * lambda * s * t_over_sin(delta);
    let shape = if delta > CHORD_TOL {
        ShapeClass::Convex
    } else if delta < -CHORD_TOL {
        ShapeClass::Nonconvex
    } else {
        ShapeClass::Chord
    };
    Ok(ProfileB { point: ProfilePoint::new(alpha, area, perimeter), shape, delta })
}

/// Family b written with β = α + acos(1/λ) and r = sin α / sin β; undefined
/// where the inner arc is a chord.
pub fn profile_b_printed(alpha: f64, lambda: f64) -> Result<ProfilePoint> {
    check_gt1(lambda)?;
    let beta = alpha + (1.0 / lambda).acos();
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    if sb.abs() < 1e-12 {
        return Err(Error::domain("printed form is singular for a chord"));
    }
    let r = sa / sb;
    let perimeter = 2.0 * (alpha + lambda * r * (PI - beta));
    let area = lambda * (alpha - sa * ca + r * r * (PI - beta + sb * cb));
    Ok(ProfilePoint::new(alpha, area, perimeter))
}

/// lim P²/A of family b as α → 0: 4 sin β₀ (1 + (π − β₀)/(sin β₀ cos β₀)).
pub fn b_ratio_limit(lambda: f64) -> Result<f64> {
    check_gt1(lambda)?;
    let b0 = (1.0 / lambda).acos();
    let (s, c) = b0.sin_cos();
    Ok(4.0 * s * (1.0 + (PI - b0) / (s * c)))
}

/// The same limit estimated from profile values by two Richardson steps on
/// α = h, h/2, h/4 (the ratio is smooth in α with a linear leading term).
pub fn b_ratio_extrapolated(lambda: f64, h: f64) -> Result<f64> {
    let ratio = |a: f64| profile_b(a, lambda).map(|p| p.point.isoperimetric_ratio());
    let (r0, r1, r2) = (ratio(h)?, ratio(0.5 * h)?, ratio(0.25 * h)?);
    let s0 = 2.0 * r1 - r0;
    let s1 = 2.0 * r2 - r1;
    Ok((4.0 * s1 - s0) / 3.0)
}

/// ψ(t) = √(1 − t²) + (π − acos t)/t.
pub fn psi(t: f64) -> f64 {
    (1.0 - t * t).max(0.0).sqrt() + (PI - t.clamp(-1.0, 1.0).acos()) / t
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiReport {
    /// min over the grid of ψ(t) − π.
    pub min_margin: f64,
    pub strictly_decreasing: bool,
    pub psi_at_one: f64,
}

pub fn psi_check(t_grid: &[f64]) -> Result<PsiReport> {
    if t_grid.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
        return Err(Error::domain("psi grid must lie in (0, 1)"));
    }
    let values: Vec<f64> = t_grid.iter().map(|&t| psi(t)).collect();
    Ok(PsiReport {
        min_margin: values.iter().map(|v| v - PI).fold(f64::INFINITY, f64::min),
        strictly_decreasing: values.windows(2).all(|w| w[1] < w[0]),
        psi_at_one: psi(1.0),
    })
}

fn bisect_report(
    pair: (&str, &str),
    lambda: f64,
    gap: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    to_volume: impl Fn(f64) -> f64,
) -> Result<CrossoverReport> {
    let root = bisect(&gap, lo, hi, 1e-15, 1e-10).map_err(|e| match e {
        Error::NoRoot(m) => Error::convergence(0, m),
        other => other,
    })?;
    Ok(CrossoverReport {
        pair: (pair.0.into(), pair.1.into()),
        lambda: Some(lambda),
        bracket: (to_volume(lo), to_volume(hi)),
        volume: to_volume(root.x),
        residual: root.residual,
        iterations: root.iterations,
    })
}

/// Area where family b starts to beat family a (λ > 1).
pub fn crossover_gt1(lambda: f64) -> Result<CrossoverReport> {
    check_gt1(lambda)?;
    // P_a − P_b at the area of the b set with half-angle α.
    let gap = |alpha: f64| {
        profile_b(alpha, lambda)
            .map(|b| 2.0 * (PI * b.point.area).sqrt() - b.point.perimeter)
            .unwrap_or(f64::NAN)
    };
    let grid: Vec<f64> = (1..=CROSSOVER_GRID).map(|k| PI * k as f64 / (CROSSOVER_GRID + 1) as f64).collect();
    let values: Vec<f64> = grid.iter().map(|&a| gap(a)).collect();
    let k = *sign_changes(&values)
        .first()
        .ok_or_else(|| Error::convergence(0, format!("families a and b do not cross for lambda {lambda}")))?;
    let area = |alpha: f64| profile_b(alpha, lambda).map(|b| b.point.area).unwrap_or(f64::NAN);
    bisect_report(("a", "b"), lambda, gap, grid[k], grid[k + 1], area)
}

/// Perimeter of a disk of weighted area `v ≤ λπ` inside B (λ < 1).
#[allow(non_snake_case)]
pub fn profile_A(v: f64, lambda: f64) -> Result<f64> {
    check_lt1(lambda)?;
    if !(v > 0.0 && v <= lambda * PI) {
        return Err(Error::domain(format!("family A needs 0 < v <= lambda*pi, got {v}")))
    }
    Ok(2.0 * (lambda * PI * v).sqrt())
}

/// Family B with external-arc parameter `beta ∈ (0, π − acos λ]`.
#[allow(non_snake_case)]
pub fn profile_B(beta: f64, lambda: f64) -> Result<ProfilePoint> {
    check_lt1(lambda)?;
    let beta_max = PI - lambda.acos();
    if !(beta > 0.0 && beta <= beta_max) {
        return Err(Error::domain(format!(
            "family B needs 0 < beta <= {beta_max} (beta = 0 encloses infinite area), got {beta}"
        )));
    }
    if beta == beta_max {
        return Ok(ProfilePoint::new(beta, lambda * PI, 2.0 * lambda * PI));
    }
    let alpha = beta + lambda.acos();
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let r = sa / sb;
    let perimeter = 2.0 * ((PI - beta) * r + lambda * alpha);
    let area = r * r * (PI - beta + sb * cb) + (alpha - sa * ca) - (1.0 - lambda) * PI;
    Ok(ProfilePoint::new(beta, area, perimeter))
}

/// Family C with inner-arc half-angle `beta_hat ∈ (0, π/2)`.
#[allow(non_snake_case)]
pub fn profile_C(beta_hat: f64, lambda: f64) -> Result<ProfilePoint> {
    check_lt1(lambda)?;
    if !(beta_hat > 0.0 && beta_hat < 0.5 * PI) {
        return Err(Error::domain(format!("family C needs 0 < beta_hat < pi/2, got {beta_hat}")));
    }
    let t = beta_hat.tan();
    let k = 1.0 - lambda;
    let perimeter = 2.0 * (PI - k * beta_hat) / t;
    let area = (PI - k * segment_area_fn(beta_hat)) / (t * t) - k * segment_area_fn(0.5 * PI - beta_hat);
    Ok(ProfilePoint::new(beta_hat, area, perimeter))
}

/// Radius of the external arc of family B.
#[allow(non_snake_case)]
pub fn radius_B(beta: f64, lambda: f64) -> f64 {
    (beta + lambda.acos()).sin() / beta.sin()
}

/// Limits of P − 2πr for large radius: family B tends to
/// 2λ acos λ − 2√(1 − λ²), family C to −2(1 − λ).
pub fn asymptotic_offsets(lambda: f64) -> Result<(f64, f64)> {
    check_lt1(lambda)?;
    Ok((2.0 * lambda * lambda.acos() - 2.0 * (1.0 - lambda * lambda).sqrt(), -2.0 * (1.0 - lambda)))
}

/// f(λ) = acos λ − √(1 − λ²) + 1 − λ.
pub fn f_lambda(lambda: f64) -> f64 {
    lambda.acos() - (1.0 - lambda * lambda).sqrt() + 1.0 - lambda
}

/// Half the large-area perimeter advantage of C over B: the difference of
/// the two asymptotic offsets, λ acos λ − √(1 − λ²) + 1 − λ.
pub fn large_area_gap(lambda: f64) -> Result<f64> {
    let (b, c) = asymptotic_offsets(lambda)?;
    Ok(0.5 * (b - c))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FLambdaReport {
    pub min_value: f64,
    pub decreasing: bool,
}

pub fn f_lambda_check(grid: &[f64]) -> Result<FLambdaReport> {
    if grid.iter().any(|&l| !(l > 0.0 && l < 1.0)) {
        return Err(Error::domain("f(lambda) grid must lie in (0, 1)"));
    }
    let values: Vec<f64> = grid.iter().map(|&l| f_lambda(l)).collect();
    Ok(FLambdaReport {
        min_value: values.iter().copied().fold(f64::INFINITY, f64::min),
        decreasing: values.windows(2).all(|w| w[1] < w[0]),
    })
}

// Inverts a map that decreases from +∞ (at lo) to its value at hi.
fn invert_decreasing(f: impl Fn(f64) -> f64, v: f64, lo: f64, hi: f64) -> Result<f64> {
    Ok(bisect(|t| f(t) - v, lo, hi, 1e-16, 0.0)?.x)
}

/// B parameter with weighted area `v > λπ`.
#[allow(non_snake_case)]
pub fn beta_B_for_area(v: f64, lambda: f64) -> Result<f64> {
    check_lt1(lambda)?;
    let beta_max = PI - lambda.acos();
    invert_decreasing(|b| profile_B(b, lambda).map(|p| p.area).unwrap_or(f64::NAN), v, 1e-12, beta_max)
}

/// C parameter with weighted area `v > 0`.
#[allow(non_snake_case)]
pub fn beta_C_for_area(v: f64, lambda: f64) -> Result<f64> {
    check_lt1(lambda)?;
    invert_decreasing(
        |b| profile_C(b, lambda).map(|p| p.area).unwrap_or(f64::NAN),
        v,
        1e-12,
        0.5 * PI - 1e-12,
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LtOneCrossover {
    pub v1: CrossoverReport,
    pub v2: CrossoverReport,
    /// Number of sign changes of P_C − P_B seen on the area grid.
    pub sign_changes: usize,
    pub gap: f64,
}

/// Largest area above λπ scanned for the B/C comparison.
pub const LT1_SCAN_SPAN: f64 = 200.0;

/// First and last areas above λπ where families B and C exchange places.
pub fn crossover_lt1(lambda: f64) -> Result<LtOneCrossover> {
    check_lt1(lambda)?;
    let base = lambda * PI;
    let gap = |v: f64| -> f64 {
        let pb = beta_B_for_area(v, lambda).and_then(|b| profile_B(b, lambda));
        let pc = beta_C_for_area(v, lambda).and_then(|b| profile_C(b, lambda));
        match (pb, pc) {
            (Ok(b), Ok(c)) => c.perimeter - b.perimeter,
            _ => f64::NAN,
        }
    };
    // Quadratic spacing concentrates nodes just above λπ.
    let grid: Vec<f64> = (1..=CROSSOVER_GRID)
        .map(|k| base + LT1_SCAN_SPAN * (k as f64 / CROSSOVER_GRID as f64).powi(2))
        .collect();
    let values: Vec<f64> = grid.iter().map(|&v| gap(v)).collect();
    let changes = sign_changes(&values);
    let (first, last) = match (changes.first(), changes.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => {
            return Err(Error::convergence(0, format!("families B and C do not cross for lambda {lambda}")))
        }
    };
    let v1 = bisect_report(("B", "C"), lambda, gap, grid[first], grid[first + 1], |v| v)?;
    let v2 = bisect_report(("B", "C"), lambda, gap, grid[last], grid[last + 1], |v| v)?;
    let gap = v2.volume - v1.volume;
    Ok(LtOneCrossover { v1, v2, sign_changes: changes.len(), gap })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeTransition {
    pub from: ShapeClass,
    pub to: ShapeClass,
    /// Contact half-angle where the inner arc is a chord.
    pub alpha: f64,
    pub area: f64,
}

/// Shape classes of family b over its whole parameter range. The inner arc
/// is a chord at exactly one half-angle, π − acos(1/λ).
pub fn shape_transitions(lambda: f64, samples: usize) -> Result<(Vec<(f64, ShapeClass)>, Vec<ShapeTransition>)> {
    check_gt1(lambda)?;
    let n = samples.max(2);
    let classes = (1..=n)
        .map(|k| {
            let a = PI * k as f64 / (n + 1) as f64;
            profile_b(a, lambda).map(|b| (a, b.shape))
        })
        .collect::<Result<Vec<_>>>()?;
    let chord = PI - (1.0 / lambda).acos();
    let transitions = classes
        .windows(2)
        .filter(|w| w[0].1 != w[1].1)
        .map(|w| {
            Ok(ShapeTransition {
                from: w[0].1,
                to: w[1].1,
                alpha: chord,
                area: profile_b(chord, lambda)?.point.area,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((classes, transitions))
}

/// Disk of area `v` just outside B.
pub fn boundary_a(v: f64) -> Result<Boundary> {
    let r = (profile_a(v)? / (2.0 * PI)).max(0.0);
    Boundary::new(vec![Piece::arc(Point::new(1.0 + 2.0 * r, 0.0), r, -0.5 * PI, 2.0 * PI)])
}

pub fn boundary_big(v: f64, lambda: f64) -> Result<Boundary> {
    let r = profile_big(v, lambda)? / (2.0 * PI);
    Boundary::new(vec![Piece::arc(Point::ORIGIN, r, -0.5 * PI, 2.0 * PI)])
}

/// Family b with the ∂B arc centered on the positive y axis.
pub fn boundary_b(alpha: f64, lambda: f64) -> Result<Boundary> {
    let b = profile_b(alpha, lambda)?;
    let (s, c) = alpha.sin_cos();
    let mut pieces = vec![Piece::arc(Point::ORIGIN, 1.0, 0.5 * PI - alpha, 2.0 * alpha)];
    let d = b.delta;
    if b.shape == ShapeClass::Chord {
        pieces.push(Piece::segment(Point::new(-s, c), Point::new(s, c)));
    } else {
        let rho = s / d.sin();
        let start = if rho > 0.0 { -0.5 * PI - d } else { 0.5 * PI - d };
        pieces.push(Piece::arc(Point::new(0.0, c + rho * d.cos()), rho.abs(), start, 2.0 * d));
    }
    Boundary::new(pieces)
}

#[allow(non_snake_case)]
pub fn boundary_A(v: f64, lambda: f64) -> Result<Boundary> {
    let r = profile_A(v, lambda)? / (2.0 * lambda * PI);
    Boundary::new(vec![Piece::arc(Point::ORIGIN, r, -0.5 * PI, 2.0 * PI)])
}

/// Family B with its ∂B arc centered on the negative y axis.
#[allow(non_snake_case)]
pub fn boundary_B(beta: f64, lambda: f64) -> Result<Boundary> {
    profile_B(beta, lambda)?;
    let beta_max = PI - lambda.acos();
    if beta == beta_max {
        return Boundary::new(vec![Piece::arc(Point::ORIGIN, 1.0, -0.5 * PI, 2.0 * PI)]);
    }
    let alpha = beta + lambda.acos();
    let c = alpha.cos();
    let r = radius_B(beta, lambda);
    Boundary::new(vec![
        Piece::arc(Point::ORIGIN, 1.0, -0.5 * PI - alpha, 2.0 * alpha),
        Piece::arc(Point::new(0.0, -c + r * beta.cos()), r, beta - 0.5 * PI, 2.0 * (PI - beta)),
    ])
}

/// Family C centered on the positive x axis.
#[allow(non_snake_case)]
pub fn boundary_C(beta_hat: f64, lambda: f64) -> Result<Boundary> {
    profile_C(beta_hat, lambda)?;
    let r = 1.0 / beta_hat.tan();
    let center = Point::new(1.0 / beta_hat.sin(), 0.0);
    Boundary::new(vec![
        Piece::arc(center, r, PI - beta_hat, 2.0 * beta_hat),
        Piece::arc(center, r, PI + beta_hat, 2.0 * (PI - beta_hat)),
    ])
}

/// Profile curves for λ > 1 (families a, b, big) or λ < 1 (A, B, C), up to
/// weighted area `v_max`.
pub fn ball_curves(lambda: f64, samples: usize, v_max: f64) -> Result<Vec<ProfileCurve>> {
    if samples < 2 {
        return Err(Error::domain("at least two samples are needed"));
    }
    let n = samples;
    let curve = |family: &str, points: Vec<ProfilePoint>| ProfileCurve { family: family.into(), lambda, points };
    if lambda > 1.0 {
        check_gt1(lambda)?;
        let top = v_max.max(lambda * PI * 1.5);
        let a = linspace(top / n as f64, top, n)
            .into_iter()
            .map(|v| Ok(ProfilePoint::new(v, v, profile_a(v)?)))
            .collect::<Result<Vec<_>>>()?;
        let b = (1..=n)
            .map(|k| profile_b(PI * k as f64 / (n + 1) as f64, lambda).map(|b| b.point))
            .collect::<Result<Vec<_>>>()?;
        let big = linspace(lambda * PI, top, n)
            .into_iter()
            .map(|v| Ok(ProfilePoint::new(v, v, profile_big(v, lambda)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(vec![curve("a", a), curve("b", b), curve("big", big)])
    } else {
        check_lt1(lambda)?;
        let top = v_max.max(lambda * PI * 1.5);
        let a = linspace(lambda * PI / n as f64, lambda * PI, n)
            .into_iter()
            .map(|v| Ok(ProfilePoint::new(v, v, profile_A(v, lambda)?)))
            .collect::<Result<Vec<_>>>()?;
        let beta_lo = beta_B_for_area(top, lambda)?;
        let b = linspace(beta_lo, PI - lambda.acos(), n)
            .into_iter()
            .map(|beta| profile_B(beta, lambda))
            .collect::<Result<Vec<_>>>()?;
        let c_lo = beta_C_for_area(top, lambda)?;
        let c = linspace(c_lo, 0.5 * PI * (1.0 - 1.0 / n as f64), n)
            .into_iter()
            .map(|bh| profile_C(bh, lambda))
            .collect::<Result<Vec<_>>>()?;
        Ok(vec![curve("A", a), curve("B", b), curve("C", c)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_disks() {
        assert!((profile_a(PI).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert!((profile_a(4.0 * PI).unwrap() - 4.0 * PI).abs() < 1e-14);
        assert_eq!(profile_big(2.0 * PI, 2.0).unwrap(), 2.0 * PI);
        assert!((profile_big(5.0 * PI, 2.0).unwrap() - 4.0 * PI).abs() < 1e-14);
        assert!(profile_big(PI, 2.0).is_err());
        assert!((profile_A(0.5 * PI, 0.5).unwrap() - PI).abs() < 1e-15);
        assert!((profile_A(0.125 * PI, 0.5).unwrap() - 0.5 * PI).abs() < 1e-15);
    }

    #[test]
    fn b_matches_printed_form_away_from_chord() {
        for &l in &[1.2, 2.0, 8.0] {
            for k in 1..60 {
                let a = PI * k as f64 / 60.0;
                let g = profile_b(a, l).unwrap();
                if g.delta.abs() < 1e-3 {
                    continue;
                }
                let p = profile_b_printed(a, l).unwrap();
                assert!((g.point.area - p.area).abs() <= 1e-12 * p.area.abs().max(1.0));
                assert!((g.point.perimeter - p.perimeter).abs() <= 1e-12 * p.perimeter);
            }
        }
    }

    #[test]
    fn b_boundary_encloses_profile_area() {
        for &a in &[0.3, 1.0, PI - (0.5f64).acos(), 2.5] {
            let b = boundary_b(a, 2.0).unwrap();
            let p = profile_b(a, 2.0).unwrap();
            assert!((2.0 * b.enclosed_area() - p.point.area).abs() < 1e-12);
        }
    }

    #[test]
    fn b_reaches_full_disk() {
        let p = profile_b(PI - 1e-9, 2.0).unwrap();
        assert!((p.point.area - 2.0 * PI).abs() < 1e-6);
        assert!((p.point.perimeter - 2.0 * PI).abs() < 1e-6);
    }

    #[test]
    fn shapes_go_convex_chord_nonconvex() {
        let (classes, transitions) = shape_transitions(2.0, 301).unwrap();
        assert_eq!(classes.first().unwrap().1, ShapeClass::Convex);
        assert_eq!(classes.last().unwrap().1, ShapeClass::Nonconvex);
        assert!(!transitions.is_empty());
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(1.0), PI);
        assert!((psi(0.5) - (0.75f64.sqrt() + 4.0 * PI / 3.0)).abs() < 1e-14);
    }

    #[test]
    fn b_and_c_limits() {
        let l: f64 = 0.5;
        let end = profile_B(PI - l.acos(), l).unwrap();
        assert_eq!((end.area, end.perimeter), (l * PI, 2.0 * l * PI));
        let near = profile_B(PI - l.acos() - 1e-9, l).unwrap();
        assert!((near.perimeter - 2.0 * l * PI).abs() < 1e-8);
        assert!(profile_B(0.0, l).is_err());
        let c = profile_C(0.25 * PI, l).unwrap();
        assert!((c.perimeter - 2.0 * (PI - 0.5 * 0.25 * PI)).abs() < 1e-14);
    }

    #[test]
    fn lt1_boundaries_enclose_profile_area() {
        let l = 0.5;
        let b = boundary_B(1.0, l).unwrap();
        assert!((b.enclosed_area() - (1.0 - l) * PI - profile_B(1.0, l).unwrap().area).abs() < 1e-12);
        let c = boundary_C(0.7, l).unwrap();
        let r: f64 = 1.0 / 0.7f64.tan();
        assert!((c.enclosed_area() - PI * r * r).abs() < 1e-12);
    }

    #[test]
    fn f_lambda_value() {
        assert!((f_lambda(0.5) - (PI / 3.0 - 0.75f64.sqrt() + 0.5)).abs() < 1e-15);
        assert!(f_lambda(1.0).abs() < 1e-15);
    }
}
