//! Polygonal cross-checks of the closed-form profiles and a random
//! perturbation probe for stationarity.

mod candidate;
mod polygon;
mod probe;

pub use candidate::{sample_candidate, CandidateId, CandidateSpec};
pub use polygon::{disk_intersection_area, weighted_area, weighted_perimeter, Polygon, GAMMA_TOL};
pub use probe::{perturbation_probe, snell_violating_cap, ProbeConfig, ProbeReport};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numeric::log_log_slope;

/// Segment counts used for the refinement study.
pub const REFINEMENT_SEGMENTS: [usize; 3] = [1_000, 10_000, 100_000];

/// Errors below this at the coarsest level are treated as resolved and get
/// no convergence order.
pub const ORDER_ERROR_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub candidate: String,
    pub lambda: f64,
    pub parameter: f64,
    pub segments: usize,
    pub closed_area: f64,
    pub closed_perimeter: f64,
    pub oracle_area: f64,
    pub oracle_perimeter: f64,
    pub rel_error_area: f64,
    pub rel_error_perimeter: f64,
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

pub fn verify(spec: &CandidateSpec, segments: usize) -> Result<VerifyReport> {
    let (closed_area, closed_perimeter) = spec.closed_form()?;
    let density = spec.density()?;
    let poly = sample_candidate(spec, segments)?;
    let oracle_area = weighted_area(&poly, &density)?;
    let oracle_perimeter = weighted_perimeter(&poly, &density);
    Ok(VerifyReport {
        candidate: spec.id.name().into(),
        lambda: spec.lambda,
        parameter: spec.parameter,
        segments: poly.vertices.len(),
        closed_area,
        closed_perimeter,
        oracle_area,
        oracle_perimeter,
        rel_error_area: rel(oracle_area, closed_area),
        rel_error_perimeter: rel(oracle_perimeter, closed_perimeter),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub candidate: String,
    pub levels: Vec<VerifyReport>,
    /// Least-squares order of the area error; `None` when the error is
    /// already below the floor at the coarsest level.
    pub area_order: Option<f64>,
    pub perimeter_order: Option<f64>,
}

/// −slope of log(error) against log(segments).
pub fn fitted_order(segments: &[f64], errors: &[f64]) -> Option<f64> {
    if errors.first().is_none_or(|&e| e <= ORDER_ERROR_FLOOR) {
        return None;
    }
    log_log_slope(segments, errors).map(|s| -s)
}

pub fn convergence(spec: &CandidateSpec, segments: &[usize]) -> Result<ConvergenceReport> {
    let levels = segments.iter().map(|&n| verify(spec, n)).collect::<Result<Vec<_>>>()?;
    let ns: Vec<f64> = levels.iter().map(|l| l.segments as f64).collect();
    let ea: Vec<f64> = levels.iter().map(|l| l.rel_error_area).collect();
    let ep: Vec<f64> = levels.iter().map(|l| l.rel_error_perimeter).collect();
    Ok(ConvergenceReport {
        candidate: spec.id.name().into(),
        area_order: fitted_order(&ns, &ea),
        perimeter_order: fitted_order(&ns, &ep),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_exact_power_law() {
        let n = [1e3, 1e4, 1e5];
        let e: Vec<f64> = n.iter().map(|x| 3.0 / (x * x)).collect();
        assert!((fitted_order(&n, &e).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(fitted_order(&n, &[1e-12, 1e-14, 1e-16]), None);
    }
}
