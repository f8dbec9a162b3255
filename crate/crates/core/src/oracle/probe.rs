//! Random smooth area-preserving deformations of a polygon. At a
//! stationary boundary the perimeter change is second order in the
//! deformation size; a first-order drop reveals a non-stationary shape.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boundary::{Boundary, Piece};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::bisect;
use crate::oracle::polygon::{weighted_area, weighted_perimeter, Polygon, GAMMA_TOL};
use crate::strip::line_alpha;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeConfig {
    /// Largest normal displacement of any vertex.
    pub magnitude: f64,
    pub trials: usize,
    pub seed: u64,
    /// Number of Fourier modes of the arclength parameter, starting at 1.
    pub harmonics: usize,
    /// A drop larger than `threshold_factor · magnitude²` counts as an
    /// improvement.
    pub threshold_factor: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { magnitude: 1e-3, trials: 200, seed: 0x5eed, harmonics: 8, threshold_factor: 10.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub seed: u64,
    pub trials: usize,
    pub magnitude: f64,
    pub base_area: f64,
    pub base_perimeter: f64,
    /// Smallest perimeter change over all trials.
    pub most_negative_change: f64,
    pub worst_trial: usize,
    /// Largest weighted-area defect after restoration.
    pub max_area_error: f64,
    pub threshold: f64,
    pub improvement_found: bool,
}

/// Area restoration target.
const AREA_TOL: f64 = 1e-8;

/// Arclength fraction over which a corner slide fades out.
const CORNER_WINDOW: f64 = 0.05;

struct Frame {
    normals: Vec<Point>,
    arclength: Vec<f64>,
    // Tangent of Γ for vertices on it.
    gamma_tangent: Vec<Option<Point>>,
    // Vertices on Γ with a neighbor off it.
    corners: Vec<usize>,
    // Weight of normal motion: 0 on Γ, rising smoothly away from corners.
    taper: Vec<f64>,
}

// Smooth bump on [0, 1]: 1 at 0, 0 from 1 on.
fn bump(u: f64) -> f64 {
    if u >= 1.0 {
        0.0
    } else {
        (0.5 * PI * u).cos().powi(2)
    }
}

fn cyclic_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(1.0 - d)
}

fn frame(poly: &Polygon, density: &Density) -> Frame {
    let v = &poly.vertices;
    let n = v.len();
    let normals = (0..n).map(|i| -(v[(i + 1) % n] - v[(i + n - 1) % n]).normalized().perp()).collect();
    let mut arclength = Vec::with_capacity(n);
    let mut s = 0.0;
    for i in 0..n {
        arclength.push(s);
        s += v[i].distance(v[(i + 1) % n]);
    }
    arclength.iter_mut().for_each(|x| *x /= s);
    let gamma_tangent: Vec<Option<Point>> = v
        .iter()
        .map(|&p| match density.interface_distance(p) {
            Some(d) if d <= GAMMA_TOL => density.interface_normal(p).map(|g| g.perp()),
            _ => None,
        })
        .collect();
    let on = |i: usize| gamma_tangent[i].is_some();
    let corners: Vec<usize> =
        (0..n).filter(|&i| on(i) && !(on((i + n - 1) % n) && on((i + 1) % n))).collect();
    let taper = (0..n)
        .map(|i| {
            if on(i) {
                return 0.0;
            }
            let near = corners
                .iter()
                .map(|&c| bump(cyclic_gap(arclength[i], arclength[c]) / CORNER_WINDOW))
                .fold(0.0, f64::max);
            1.0 - near
        })
        .collect();
    Frame { normals, arclength, gamma_tangent, corners, taper }
}

fn onto_gamma(density: &Density, p: Point) -> Point {
    match density {
        Density::Ball { .. } => p.normalized(),
        _ => p,
    }
}

fn offset(v: &[Point], fr: &Frame, t: f64) -> Vec<Point> {
    v.iter().enumerate().map(|(i, &p)| p + fr.normals[i] * (t * fr.taper[i])).collect()
}

fn trial(
    poly: &Polygon,
    density: &Density,
    fr: &Frame,
    cfg: &ProbeConfig,
    base_area: f64,
    index: usize,
) -> Result<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let mut normal = || rng.sample::<f64, _>(StandardNormal);
    // Mode k is damped by 1/k² so the deformation stays smooth.
    let coeffs: Vec<(f64, f64)> = (1..=cfg.harmonics)
        .map(|k| {
            let w = 1.0 / (k * k) as f64;
            (w * normal(), w * normal())
        })
        .collect();
    let slides: Vec<f64> = fr.corners.iter().map(|_| normal()).collect();
    let mut disp: Vec<Point> = fr
        .arclength
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let delta: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| {
                    let w = 2.0 * PI * (k + 1) as f64 * s;
                    a * w.cos() + b * w.sin()
                })
                .sum();
            let slide = fr.corners.iter().zip(&slides).fold(Point::ORIGIN, |acc, (&c, &z)| {
                let tau = fr.gamma_tangent[c].expect("corners lie on the interface");
                acc + tau * (z * bump(cyclic_gap(s, fr.arclength[c]) / CORNER_WINDOW))
            });
            fr.normals[i] * (delta * fr.taper[i]) + slide
        })
        .collect();
    let peak = disp.iter().fold(0.0f64, |m, d| m.max(d.norm()));
    if peak == 0.0 {
        return Err(Error::domain("degenerate perturbation"));
    }
    disp.iter_mut().for_each(|d| *d = *d * (cfg.magnitude / peak));

    let moved: Vec<Point> = poly
        .vertices
        .iter()
        .zip(&disp)
        .zip(&fr.gamma_tangent)
        .map(|((&p, &d), g)| if g.is_some() { onto_gamma(density, p + d) } else { p + d })
        .collect();

    let defect = |t: f64| -> f64 {
        Polygon::closed(offset(&moved, fr, t))
            .and_then(|q| weighted_area(&q, density))
            .map(|a| a - base_area)
            .unwrap_or(f64::NAN)
    };
    let mut span = 2.0 * cfg.magnitude;
    while defect(-span) * defect(span) > 0.0 {
        span *= 2.0;
        if span > 1e3 * cfg.magnitude {
            return Err(Error::convergence(0, "could not restore the enclosed area"));
        }
    }
    let root = bisect(defect, -span, span, 0.0, AREA_TOL * base_area.abs().max(1.0) * 1e-2)?;
    let q = Polygon::closed(offset(&moved, fr, root.x))?;
    Ok((weighted_perimeter(&q, density), root.residual.abs()))
}

pub fn perturbation_probe(poly: &Polygon, density: &Density, cfg: &ProbeConfig) -> Result<ProbeReport> {
    if !poly.closed {
        return Err(Error::domain("the probe needs a closed polygon"));
    }
    if !(cfg.magnitude > 0.0) || cfg.trials == 0 || cfg.harmonics == 0 {
        return Err(Error::domain("magnitude, trials and harmonics must be positive"));
    }
    let base_area = weighted_area(poly, density)?;
    let base_perimeter = weighted_perimeter(poly, density);
    let fr = frame(poly, density);
    let results = (0..cfg.trials)
        .into_par_iter()
        .map(|k| trial(poly, density, &fr, cfg, base_area, k))
        .collect::<Result<Vec<_>>>()?;
    let (worst_trial, most_negative_change) = results
        .iter()
        .map(|(p, _)| p - base_perimeter)
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one trial");
    let max_area_error = results.iter().map(|r| r.1).fold(0.0, f64::max);
    let threshold = cfg.threshold_factor * cfg.magnitude * cfg.magnitude;
    Ok(ProbeReport {
        seed: cfg.seed,
        trials: cfg.trials,
        magnitude: cfg.magnitude,
        base_area,
        base_perimeter,
        most_negative_change,
        worst_trial,
        max_area_error,
        threshold,
        improvement_found: most_negative_change < -threshold,
    })
}

/// Cap of the unit circle over y = 0 for the line density, with contact
/// angle off by `error` radians from the refraction law.
pub fn snell_violating_cap(lambda: f64, error: f64, segments: usize) -> Result<Polygon> {
    let a = line_alpha(lambda)? + error;
    if !(a > 0.0 && a < PI) {
        return Err(Error::domain(format!("contact angle {a} outside (0, pi)")));
    }
    let s = a.sin();
    let b = Boundary::new(vec![
        Piece::segment(Point::new(-s, 0.0), Point::new(s, 0.0)),
        Piece::arc(Point::new(0.0, a.cos()), 1.0, a - 0.5 * PI, 2.0 * (PI - a)),
    ])?;
    Polygon::closed(b.sample(segments))
}
