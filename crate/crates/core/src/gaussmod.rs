//! Half-planes bounded by horizontal and vertical lines for the density
//! exp(−x² − y⁴), and the offset where vertical lines start to win.
//!
//! Offsets are nonnegative; the density is even in both coordinates so a
//! negative offset is the mirror image of a positive one.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::boundary::{Boundary, Piece};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::{bisect, linspace, newton_bisect};
use crate::special::{erfc, gamma, upper_incomplete_gamma};

/// Bracket known to contain the crossover offset.
pub const CROSSOVER_BRACKET: (f64, f64) = (0.15, 0.16);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineProfile {
    pub orientation: Orientation,
    pub offset: f64,
    pub volume: f64,
    pub perimeter: f64,
}

fn check_offset(t: f64) -> Result<()> {
    if t >= 0.0 && !t.is_nan() {
        Ok(())
    } else {
        Err(Error::domain(format!("offset must be nonnegative, got {t}")))
    }
}

/// log(√π / (2Γ(5/4))) ≈ −0.02251.
pub fn dominance_constant() -> f64 {
    (PI.sqrt() / (2.0 * gamma(1.25))).ln()
}

/// Region {y > t}: volume (√π/4)Γ(1/4, t⁴), perimeter √π e^{−t⁴}.
pub fn horizontal_profile(y: f64) -> Result<LineProfile> {
    check_offset(y)?;
    let y4 = y.powi(4);
    Ok(LineProfile {
        orientation: Orientation::Horizontal,
        offset: y,
        volume: 0.25 * PI.sqrt() * upper_incomplete_gamma(0.25, y4)?,
        perimeter: PI.sqrt() * (-y4).exp(),
    })
}

/// Region {x > t}: volume √π Γ(5/4) erfc(t), perimeter 2Γ(5/4) e^{−t²}.
pub fn vertical_profile(x: f64) -> Result<LineProfile> {
    check_offset(x)?;
    let g = gamma(1.25);
    Ok(LineProfile {
        orientation: Orientation::Vertical,
        offset: x,
        volume: PI.sqrt() * g * erfc(x),
        perimeter: 2.0 * g * (-x * x).exp(),
    })
}

pub fn profile(orientation: Orientation, t: f64) -> Result<LineProfile> {
    match orientation {
        Orientation::Horizontal => horizontal_profile(t),
        Orientation::Vertical => vertical_profile(t),
    }
}

/// Offset x of the vertical line enclosing the same volume as the horizontal
/// line at height y, i.e. erfc(x) = Γ(1/4, y⁴)/Γ(1/4).
pub fn equal_volume_x(y: f64) -> Result<f64> {
    check_offset(y)?;
    let target = upper_incomplete_gamma(0.25, y.powi(4))? / gamma(0.25);
    if target >= 1.0 {
        return Ok(0.0);
    }
    if !(target > 0.0) {
        return Err(Error::convergence(0, format!("volume above y = {y} underflows")));
    }
    // Solve in log space so tiny tail volumes keep full relative accuracy.
    let ln_target = target.ln();
    let g = |x: f64| {
        let e = erfc(x);
        (e.ln() - ln_target, -std::f64::consts::FRAC_2_SQRT_PI * (-x * x).exp() / e)
    };
    let mut hi = 1.0;
    while g(hi).0 > 0.0 {
        hi *= 2.0;
        if hi > 64.0 {
            return Err(Error::convergence(0, "no bracket for the equal-volume offset"));
        }
    }
    let root = newton_bisect(g, 0.0, hi, 1e-15).map_err(|e| match e {
        Error::NoRoot(m) => Error::convergence(0, m),
        other => other,
    })?;
    Ok(root.x)
}

/// Inverse of `equal_volume_x`: the height y whose horizontal line matches
/// the volume of the vertical line at x.
pub fn equal_volume_y(x: f64) -> Result<f64> {
    check_offset(x)?;
    let v = vertical_profile(x)?.volume;
    if x == 0.0 {
        return Ok(0.0);
    }
    let f = |y: f64| horizontal_profile(y).map(|p| (p.volume / v).ln()).unwrap_or(f64::NAN);
    let mut hi = 1.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if hi > 16.0 {
            return Err(Error::convergence(0, "no bracket for the equal-volume height"));
        }
    }
    Ok(bisect(f, 0.0, hi, 1e-15, 0.0)?.x)
}

/// −x(y)² + y⁴ − log(√π/(2Γ(5/4))); negative exactly when the vertical line
/// of equal volume has strictly less perimeter.
pub fn dominance_margin(y: f64) -> Result<f64> {
    let x = equal_volume_x(y)?;
    Ok(-x * x + y.powi(4) - dominance_constant())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussCrossover {
    pub y_star: f64,
    pub x_star: f64,
    pub volume: f64,
    pub constant: f64,
    pub bracket: (f64, f64),
    pub margin_below: f64,
    pub margin_above: f64,
    pub iterations: u32,
}

/// Root of `dominance_margin` inside `CROSSOVER_BRACKET`.
pub fn crossover_y() -> Result<GaussCrossover> {
    let (lo, hi) = CROSSOVER_BRACKET;
    let f = |y: f64| dominance_margin(y).unwrap_or(f64::NAN);
    let root = bisect(f, lo, hi, 1e-12, 0.0).map_err(|e| match e {
        Error::NoRoot(m) => Error::convergence(0, m),
        other => other,
    })?;
    let y = root.x;
    Ok(GaussCrossover {
        y_star: y,
        x_star: equal_volume_x(y)?,
        volume: horizontal_profile(y)?.volume,
        constant: dominance_constant(),
        bracket: (lo, hi),
        margin_below: dominance_margin(lo)?,
        margin_above: dominance_margin(hi)?,
        iterations: root.iterations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub orientation: Orientation,
    pub offset: f64,
    pub volume: f64,
    pub perimeter: f64,
    /// Dominance margin at the volume of this row.
    pub margin: f64,
}

/// Both families on `samples` offsets in [0, t_max].
pub fn curves(samples: usize, t_max: f64) -> Result<Vec<CurveRow>> {
    if samples < 2 || !(t_max > 0.0) {
        return Err(Error::domain("need at least two samples and a positive range"));
    }
    let mut rows = Vec::with_capacity(2 * samples);
    for t in linspace(0.0, t_max, samples) {
        let h = horizontal_profile(t)?;
        rows.push(CurveRow {
            orientation: h.orientation,
            offset: t,
            volume: h.volume,
            perimeter: h.perimeter,
            margin: dominance_margin(t)?,
        });
    }
    for t in linspace(0.0, t_max, samples) {
        let v = vertical_profile(t)?;
        rows.push(CurveRow {
            orientation: v.orientation,
            offset: t,
            volume: v.volume,
            perimeter: v.perimeter,
            margin: dominance_margin(equal_volume_y(t)?)?,
        });
    }
    Ok(rows)
}

/// Half-width of the boxes used to truncate the line regions; the density
/// is below 1e−15 outside them.
pub const BOX_X: f64 = 6.0;
pub const BOX_Y: f64 = 3.0;

fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Boundary> {
    let c = [Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1)];
    Boundary::new((0..4).map(|i| Piece::segment(c[i], c[(i + 1) % 4])).collect())
}

/// {y > t} truncated to [−6, 6] × [t, 3].
pub fn horizontal_box(t: f64) -> Result<Boundary> {
    check_offset(t)?;
    if t >= BOX_Y {
        return Err(Error::domain("offset beyond the truncation box"));
    }
    rectangle(-BOX_X, t, BOX_X, BOX_Y)
}

/// {x > t} truncated to [t, 6] × [−3, 3].
pub fn vertical_box(t: f64) -> Result<Boundary> {
    check_offset(t)?;
    if t >= BOX_X {
        return Err(Error::domain("offset beyond the truncation box"));
    }
    rectangle(t, -BOX_Y, BOX_X, BOX_Y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_mass_at_zero() {
        let h = horizontal_profile(0.0).unwrap();
        let v = vertical_profile(0.0).unwrap();
        assert!((h.volume - v.volume).abs() < 1e-12);
        assert!((h.perimeter - PI.sqrt()).abs() < 1e-15);
        assert!(v.perimeter > h.perimeter);
        assert_eq!(equal_volume_x(0.0).unwrap(), 0.0);
    }

    #[test]
    fn constant_value() {
        assert!((dominance_constant() + 0.02251).abs() < 1e-4);
    }

    #[test]
    fn equal_volume_residual() {
        for &y in &[0.155, 0.5, 1.0, 2.0] {
            let x = equal_volume_x(y).unwrap();
            let vh = horizontal_profile(y).unwrap().volume;
            let vv = vertical_profile(x).unwrap().volume;
            assert!((vh - vv).abs() < 1e-12 * vh.max(1e-300).max(1.0));
            assert!((equal_volume_y(x).unwrap() - y).abs() < 1e-9);
        }
    }

    #[test]
    fn margin_signs() {
        assert!(dominance_margin(0.0).unwrap() > 0.0);
        assert!(dominance_margin(0.15).unwrap() > 0.0);
        assert!(dominance_margin(0.16).unwrap() < 0.0);
        let c = crossover_y().unwrap();
        assert!(c.y_star > 0.15 && c.y_star < 0.16);
    }

    #[test]
    fn negative_offset_rejected() {
        assert!(horizontal_profile(-0.1).is_err());
        assert!(vertical_profile(-0.1).is_err());
    }
}
