//! Grid checks of calibration fields and of the weighted minimal-curve
//! equation for graphs.
//!
//! A field g calibrates ∂E for the density f when |g| ≤ 1, g equals the
//! normal of ∂E on ∂E, and div(f g) = 0. For a graph y = φ(x) the weighted
//! length ∫ f √(1 + φ′²) dx is stationary when
//! (f φ′ / √(1 + φ′²))′ − √(1 + φ′²) ∂f/∂y = 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::{integrate, linspace, log_log_slope, Tolerance};

/// Grid points where the density falls below this are rejected.
pub const MIN_DENSITY: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SmoothDensity {
    /// f = |p|.
    Cone,
    Constant { value: f64 },
    /// f = eˣ.
    ExpX,
}

impl SmoothDensity {
    pub fn value(&self, p: Point) -> f64 {
        match *self {
            SmoothDensity::Cone => p.norm(),
            SmoothDensity::Constant { value } => value,
            SmoothDensity::ExpX => p.x.exp(),
        }
    }

    pub fn gradient(&self, p: Point) -> Point {
        match *self {
            SmoothDensity::Cone => p.normalized(),
            SmoothDensity::Constant { .. } => Point::ORIGIN,
            SmoothDensity::ExpX => Point::new(p.x.exp(), 0.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) {
            return Err(Error::domain("window corners out of order"));
        }
        Ok(Window { x0, x1, y0, y1 })
    }

    fn contains(&self, p: Point) -> bool {
        p.x >= self.x0 && p.x <= self.x1 && p.y >= self.y0 && p.y <= self.y1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    /// f = r, g = (−x, y)/r, ∂E the hyperbola y = √(1 + x²).
    Cone,
    /// f = 1, g = (0, 1), ∂E the x axis.
    HalfPlane,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationCase {
    pub kind: CaseKind,
    pub window: Window,
    /// Multiplies the field; 1 for the genuine calibration.
    pub scale: f64,
}

impl CalibrationCase {
    pub fn cone() -> Self {
        CalibrationCase { kind: CaseKind::Cone, window: Window { x0: -2.0, x1: 2.0, y0: 0.5, y1: 3.0 }, scale: 1.0 }
    }

    pub fn half_plane() -> Self {
        CalibrationCase {
            kind: CaseKind::HalfPlane,
            window: Window { x0: -2.0, x1: 2.0, y0: -1.0, y1: 1.0 },
            scale: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn density(&self) -> SmoothDensity {
        match self.kind {
            CaseKind::Cone => SmoothDensity::Cone,
            CaseKind::HalfPlane => SmoothDensity::Constant { value: 1.0 },
        }
    }

    pub fn field(&self, p: Point) -> Point {
        let g = match self.kind {
            CaseKind::Cone => Point::new(-p.x, p.y) * (1.0 / p.norm()),
            CaseKind::HalfPlane => Point::new(0.0, 1.0),
        };
        g * self.scale
    }

    /// The calibrated curve as a graph: φ and φ′.
    pub fn surface(&self, x: f64) -> (f64, f64) {
        match self.kind {
            CaseKind::Cone => {
                let y = (1.0 + x * x).sqrt();
                (y, x / y)
            }
            CaseKind::HalfPlane => (0.0, 0.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResiduals {
    pub grid_step: f64,
    /// max(|g| − 1) over the grid.
    pub norm_excess: f64,
    /// max |div(f g)| over interior grid points.
    pub divergence: f64,
    /// max |g − ν| on surface samples inside the window.
    pub normal_mismatch: f64,
    pub grid_points: usize,
}

fn grid(lo: f64, hi: f64, h: f64) -> Vec<f64> {
    let n = ((hi - lo) / h).floor() as usize;
    (0..=n).map(|i| lo + h * i as f64).collect()
}

/// Residuals of the three calibration conditions on a grid of step `h`.
/// The divergence is formed as f div g + ∇f · g with centered differences
/// of f and g separately, so its error is second order in `h`.
pub fn calibration_residuals(case: &CalibrationCase, h: f64) -> Result<CalibrationResiduals> {
    if !(h > 0.0) {
        return Err(Error::domain(format!("grid step must be positive, got {h}")));
    }
    let w = case.window;
    let f = case.density();
    let xs = grid(w.x0, w.x1, h);
    let ys = grid(w.y0, w.y1, h);
    let mut norm_excess = f64::NEG_INFINITY;
    let mut divergence: f64 = 0.0;
    for &x in &xs {
        for &y in &ys {
            let p = Point::new(x, y);
            if f.value(p) < MIN_DENSITY {
                return Err(Error::SingularPointInWindow { x, y });
            }
            norm_excess = norm_excess.max(case.field(p).norm() - 1.0);
            let (ex, ey) = (Point::new(h, 0.0), Point::new(0.0, h));
            if !(w.contains(p - ex) && w.contains(p + ex) && w.contains(p - ey) && w.contains(p + ey)) {
                continue;
            }
            let g = |q: Point| case.field(q);
            let div_g = (g(p + ex).x - g(p - ex).x + g(p + ey).y - g(p - ey).y) / (2.0 * h);
            let grad_f = Point::new(
                (f.value(p + ex) - f.value(p - ex)) / (2.0 * h),
                (f.value(p + ey) - f.value(p - ey)) / (2.0 * h),
            );
            divergence = divergence.max((f.value(p) * div_g + grad_f.dot(g(p))).abs());
        }
    }
    let mut normal_mismatch: f64 = 0.0;
    for &x in &xs {
        let (y, dy) = case.surface(x);
        let p = Point::new(x, y);
        if !w.contains(p) {
            continue;
        }
        let nu = Point::new(-dy, 1.0).normalized();
        normal_mismatch = normal_mismatch.max((case.field(p) * (1.0 / case.scale) - nu).norm());
    }
    Ok(CalibrationResiduals {
        grid_step: h,
        norm_excess,
        divergence,
        normal_mismatch,
        grid_points: xs.len() * ys.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefinementReport {
    pub steps: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Slope of log residual against log step.
    pub order: Option<f64>,
}

/// Divergence residual at steps h, h/2, …, over `levels` levels.
pub fn divergence_refinement(case: &CalibrationCase, h: f64, levels: usize) -> Result<RefinementReport> {
    let steps: Vec<f64> = (0..levels).map(|k| h / 2f64.powi(k as i32)).collect();
    let residuals = steps
        .iter()
        .map(|&s| calibration_residuals(case, s).map(|r| r.divergence))
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinementReport { order: log_log_slope(&steps, &residuals), steps, residuals })
}

/// Max over interior samples of the centered-difference residual of the
/// weighted minimal-curve equation, for φ sampled at x0, x0 + h, ….
pub fn mse_residual(x0: f64, h: f64, phi: &[f64], density: &SmoothDensity) -> Result<f64> {
    if phi.len() < 5 {
        return Err(Error::InsufficientPoints { required: 5, got: phi.len() });
    }
    let n = phi.len();
    let x = |i: usize| x0 + h * i as f64;
    let slope = |i: usize| (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    let flux = |i: usize| {
        let d = slope(i);
        density.value(Point::new(x(i), phi[i])) * d / (1.0 + d * d).sqrt()
    };
    Ok((2..n - 2)
        .map(|i| {
            let d = slope(i);
            let fy = density.gradient(Point::new(x(i), phi[i])).y;
            ((flux(i + 1) - flux(i - 1)) / (2.0 * h) - (1.0 + d * d).sqrt() * fy).abs()
        })
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphExample {
    /// φ(x) = a + ∫₀ˣ (e^{2t}(1 + 1/b²) − 1)^{−1/2} dt under f = eˣ.
    ExpX { a: f64, b: f64 },
    /// φ(x) = √(1 + x²) under f = r.
    Cone,
    /// φ(x) = c0 + c1 x under a constant density.
    Affine { c0: f64, c1: f64 },
}

impl GraphExample {
    pub fn density(&self) -> SmoothDensity {
        match self {
            GraphExample::ExpX { .. } => SmoothDensity::ExpX,
            GraphExample::Cone => SmoothDensity::Cone,
            GraphExample::Affine { .. } => SmoothDensity::Constant { value: 1.0 },
        }
    }

    /// Default sampling interval.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            GraphExample::ExpX { .. } => (0.5, 2.0),
            GraphExample::Cone | GraphExample::Affine { .. } => (-2.0, 2.0),
        }
    }

    /// Analytic φ′.
    pub fn slope(&self, x: f64) -> f64 {
        match *self {
            GraphExample::ExpX { b, .. } => ((2.0 * x).exp() * (1.0 + 1.0 / (b * b)) - 1.0).sqrt().recip(),
            GraphExample::Cone => x / (1.0 + x * x).sqrt(),
            GraphExample::Affine { c1, .. } => c1,
        }
    }

    /// φ at `n` equally spaced points of [x0, x1].
    pub fn sample(&self, x0: f64, x1: f64, n: usize) -> Result<Vec<f64>> {
        let xs = linspace(x0, x1, n);
        match *self {
            GraphExample::ExpX { a, b } => {
                if (2.0 * x0).exp() * (1.0 + 1.0 / (b * b)) <= 1.0 {
                    return Err(Error::domain("graph is vertical inside the interval"));
                }
                let tol = Tolerance::new(1e-15, 1e-14);
                let base = a + integrate(|t| self.slope(t), 0.0, x0, tol)?.value;
                let mut out = Vec::with_capacity(n);
                let mut acc = base;
                let mut prev = x0;
                for &x in &xs {
                    acc += integrate(|t| self.slope(t), prev, x, tol)?.value;
                    out.push(acc);
                    prev = x;
                }
                Ok(out)
            }
            GraphExample::Cone => Ok(xs.iter().map(|x| (1.0 + x * x).sqrt()).collect()),
            GraphExample::Affine { c0, c1 } => Ok(xs.iter().map(|x| c0 + c1 * x).collect()),
        }
    }
}

/// MSE residual of `example` with `n`, 2n − 1, 4n − 3, … samples.
pub fn mse_refinement(example: &GraphExample, n: usize, levels: usize) -> Result<RefinementReport> {
    let (x0, x1) = example.domain();
    let mut steps = Vec::with_capacity(levels);
    let mut residuals = Vec::with_capacity(levels);
    let mut m = n;
    for _ in 0..levels {
        let h = (x1 - x0) / (m - 1) as f64;
        let phi = example.sample(x0, x1, m)?;
        residuals.push(mse_residual(x0, h, &phi, &example.density())?);
        steps.push(h);
        m = 2 * m - 1;
    }
    Ok(RefinementReport { order: log_log_slope(&steps, &residuals), steps, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_is_exact() {
        let r = calibration_residuals(&CalibrationCase::half_plane(), 0.1).unwrap();
        assert!(r.norm_excess.abs() < 1e-15 && r.divergence == 0.0 && r.normal_mismatch == 0.0);
    }

    #[test]
    fn scaled_field_is_flagged() {
        let r = calibration_residuals(&CalibrationCase::cone().with_scale(1.1), 0.1).unwrap();
        assert!((r.norm_excess - 0.1).abs() < 1e-12);
    }

    #[test]
    fn singular_window_rejected() {
        let mut c = CalibrationCase::cone();
        c.window = Window::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert!(matches!(calibration_residuals(&c, 0.5), Err(Error::SingularPointInWindow { .. })));
    }

    #[test]
    fn affine_graph_is_minimal() {
        let g = GraphExample::Affine { c0: 0.3, c1: -0.7 };
        let phi = g.sample(-2.0, 2.0, 41).unwrap();
        assert!(mse_residual(-2.0, 0.1, &phi, &g.density()).unwrap() < 1e-13);
    }
}
