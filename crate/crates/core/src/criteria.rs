//! The twelve reproduction checks, each evaluated end to end with its
//! pinned tolerance and runtime budget.

use std::f64::consts::PI;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::ball;
use crate::calibration::{self, CalibrationCase, GraphExample};
use crate::density::Density;
use crate::error::Result;
use crate::gaussmod;
use crate::geometry::Point;
use crate::numeric::linspace;
use crate::oracle::{self, CandidateSpec, REFINEMENT_SEGMENTS};
use crate::stationarity::{self, CurveSample, JunctionCheck, CONSTANCY_TOL};
use crate::strip::{self, StripFamily};

pub const CRITERIA: usize = 12;

/// Order window for every refinement study.
pub const ORDER_RANGE: (f64, f64) = (1.7, 2.3);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub elapsed_seconds: f64,
    pub runtime_limit_seconds: Option<f64>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let budget = self.runtime_limit_seconds.map_or(String::new(), |l| format!(", limit {l} s"));
        format!(
            "[{}] {:>2} {}: {} ({:.3} s{budget})",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_seconds
        )
    }
}

fn name_and_limit(id: usize) -> (&'static str, Option<f64>) {
    match id {
        1 => ("gauss-mod constant", Some(0.1)),
        2 => ("gauss-mod crossover", Some(1.0)),
        3 => ("strip continuity and ordering", Some(10.0)),
        4 => ("arc-gap inequality", None),
        5 => ("strip reversing behavior", None),
        6 => ("strip type-iv dominance", None),
        7 => ("ball lambda > 1", None),
        8 => ("ball lambda < 1", None),
        9 => ("line density ratio", None),
        10 => ("oracle certification", Some(60.0)),
        11 => ("stationarity", None),
        12 => ("calibration", None),
        _ => ("unknown", None),
    }
}

/// Runs criterion `id` (1-based).
pub fn evaluate(id: usize) -> CriterionResult {
    let (name, limit) = name_and_limit(id);
    let start = Instant::now();
    let outcome = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed().as_secs_f64();
    let (mut pass, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    if let Some(l) = limit {
        if elapsed >= l {
            pass = false;
            detail.push_str(&format!("; over the {l} s budget"));
        }
    }
    CriterionResult {
        id,
        name: name.into(),
        pass,
        detail,
        elapsed_seconds: elapsed,
        runtime_limit_seconds: limit,
    }
}

pub fn evaluate_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(evaluate).collect()
}

type Outcome = Result<(bool, String)>;

fn in_order_range(o: f64) -> bool {
    o >= ORDER_RANGE.0 && o <= ORDER_RANGE.1
}

fn c1() -> Outcome {
    let c = gaussmod::dominance_constant();
    Ok(((c + 0.02251).abs() < 1e-4, format!("log(sqrt(pi)/(2 Gamma(5/4))) = {c:.7}")))
}

fn c2() -> Outcome {
    let lo = gaussmod::dominance_margin(0.15)?;
    let hi = gaussmod::dominance_margin(0.16)?;
    let c = gaussmod::crossover_y()?;
    let pass = lo > 0.0 && hi < 0.0 && c.y_star > 0.15 && c.y_star < 0.16;
    Ok((pass, format!("margin(0.15) = {lo:.3e}, margin(0.16) = {hi:.3e}, y* = {:.10}", c.y_star)))
}

fn c3() -> Outcome {
    let join = (strip::profile_i(PI)? - 2.0 * PI).abs().max((strip::profile_ii(PI)? - 2.0 * PI).abs());
    let mut pass = join < 1e-12;
    let mut notes = vec![format!("|P_i(pi) - 2pi|, |P_ii(pi) - 2pi| <= {join:.1e}")];
    for lambda in [1.1, 2.0, 8.0, 1000.0] {
        let cmp = strip::StripComparator::new(lambda)?;
        let v0 = strip::crossover_v0(lambda)?.volume;
        let order = [0.5 * PI, 0.5 * (PI + v0), 1.01 * v0, 1.5 * v0]
            .iter()
            .map(|&v| cmp.best(v).map(|b| b.family))
            .collect::<Result<Vec<_>>>()?;
        let ok = v0 > PI
            && order[0] == StripFamily::I
            && order[1] == StripFamily::II
            && order[2] == StripFamily::III
            && order[3] == StripFamily::III;
        pass &= ok;
        let names: Vec<&str> = order.iter().map(|f| f.name()).collect();
        notes.push(format!("lambda {lambda}: v0 = {v0:.6}, best {}", names.join(">")));
    }
    Ok((pass, notes.join("; ")))
}

fn c4() -> Outcome {
    let m = strip::arc_gap_min()?;
    let margin = m.value - PI / 4.0;
    let pass = margin > 1e-6 && m.x > PI / 16.0 && m.x < PI / 8.0;
    Ok((pass, format!("min {:.9} at x = {:.6}, margin over pi/4 {margin:.3e}", m.value, m.x)))
}

fn single_interior_min(v: &[f64]) -> usize {
    (1..v.len() - 1).filter(|&i| v[i] < v[i - 1] && v[i] <= v[i + 1]).count()
}

fn c5() -> Outcome {
    let c = strip::reversing_curve(1.1, 1.0, 0.8, 500)?;
    let a: Vec<f64> = c.points.iter().map(|p| p.area).collect();
    let p: Vec<f64> = c.points.iter().map(|p| p.perimeter).collect();
    let (ma, mp) = (single_interior_min(&a), single_interior_min(&p));
    Ok((ma == 1 && mp == 1, format!("interior minima: area {ma}, perimeter {mp}")))
}

fn c6() -> Outcome {
    let grid = linspace(0.01, 1.0, 100);
    let mut pass = true;
    let mut notes = Vec::new();
    for lambda in [4.0 / PI, 2.0, 8.0] {
        let r = strip::iv_dominance_scan(lambda, &grid)?;
        pass &= r.violations == 0 && r.uncomparable == 0;
        notes.push(format!(
            "lambda {lambda:.4}: {} violations, {} uncomparable, min margin {:.3e}",
            r.violations, r.uncomparable, r.min_margin
        ));
    }
    Ok((pass, notes.join("; ")))
}

fn c7() -> Outcome {
    let grid: Vec<f64> = (1..=1000).map(|k| k as f64 / 1001.0).collect();
    let psi = ball::psi_check(&grid)?;
    let psi_ok = psi.min_margin > 0.0 && (psi.psi_at_one - PI).abs() < 1e-12;
    let lambda = 2.0;
    let limit = ball::b_ratio_limit(lambda)?;
    let extrapolated = ball::b_ratio_extrapolated(lambda, 1e-2)?;
    let ratio_ok = (limit - extrapolated).abs() < 1e-6;
    let big_ok = ball::profile_big(lambda * PI, lambda)? == 2.0 * PI;
    let v0 = ball::crossover_gt1(lambda)?.volume;
    let pb = |v: f64| -> Result<f64> {
        // Family b area is increasing in α; invert by bisection.
        let f = |a: f64| ball::profile_b(a, lambda).map(|b| b.point.area - v).unwrap_or(f64::NAN);
        let a = crate::numeric::bisect(f, 1e-9, PI - 1e-9, 1e-15, 0.0)?.x;
        Ok(ball::profile_b(a, lambda)?.point.perimeter)
    };
    let below = 0.5 * v0;
    let between = 0.5 * (v0 + lambda * PI);
    let above = 1.5 * lambda * PI;
    let order_ok = ball::profile_a(below)? < pb(below)?
        && pb(between)? < ball::profile_a(between)?
        && ball::profile_big(above, lambda)? < ball::profile_a(above)?
        && v0 < lambda * PI;
    Ok((
        psi_ok && ratio_ok && big_ok && order_ok,
        format!(
            "min psi - pi = {:.3e}; ratio limit {limit:.9} vs extrapolated {extrapolated:.9}; \
             P_big(2pi) exact: {big_ok}; v0 = {v0:.6}, ordering a<b below, b<a above, big<a past 2pi: {order_ok}",
            psi.min_margin
        ),
    ))
}

fn c8() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for lambda in [0.25, 0.5, 0.9] {
        let mut worst = f64::INFINITY;
        for k in 1..=500 {
            let bh = 0.5 * PI * k as f64 / 501.0;
            let c = ball::profile_C(bh, lambda)?;
            worst = worst.min(c.perimeter * c.perimeter - 4.0 * lambda * PI * c.area);
        }
        let x = ball::crossover_lt1(lambda)?;
        let ok = worst > 0.0 && x.v1.volume <= x.v2.volume && x.v1.volume > lambda * PI;
        pass &= ok;
        notes.push(format!(
            "lambda {lambda}: min P_C^2 - 4 lambda pi A_C = {worst:.3e}, v1 = {:.8}, v2 = {:.8}",
            x.v1.volume, x.v2.volume
        ));
    }
    let grid: Vec<f64> = (1..=1000).map(|k| k as f64 / 1001.0).collect();
    let f = ball::f_lambda_check(&grid)?;
    pass &= f.min_value > 0.0;
    let lambda: f64 = 0.5;
    let end = ball::profile_B(PI - lambda.acos() - 1e-10, lambda)?;
    let gap = (end.perimeter - 2.0 * lambda * PI).abs();
    pass &= gap < 1e-8;
    notes.push(format!("min f = {:.3e}; |P_B - 2 lambda pi| near the end = {gap:.1e}", f.min_value));
    Ok((pass, notes.join("; ")))
}

fn c9() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for lambda in [1.01, 2.0, 10.0, 100.0] {
        let margin = 4.0 * PI * lambda - strip::line_density_ratio(lambda)?;
        pass &= margin > 0.0;
        notes.push(format!("lambda {lambda}: margin {margin:.4}"));
    }
    Ok((pass, notes.join("; ")))
}

/// Candidates certified by the oracle.
pub fn certification_set() -> Vec<CandidateSpec> {
    let s = |id: &str, l: f64, p: f64| CandidateSpec::parse(id, Some(l), Some(p)).expect("known id");
    vec![
        s("strip:ii", 2.0, 2.0 * PI),
        s("strip:iii", 2.0, 0.5),
        s("strip:iv", 2.0, 0.5),
        s("ball:b", 2.0, 0.3),
        s("ball:b", 2.0, 2.5),
        s("ball:B", 0.5, 1.0),
        s("ball:C", 0.5, 0.25 * PI),
        s("line", 2.0, 0.0),
        s("gauss:h", 1.0, 0.5),
        s("gauss:v", 1.0, 0.5),
        s("disk", 1.0, PI),
        s("strip:i", 2.0, PI),
    ]
}

fn c10() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for spec in certification_set() {
        let r = oracle::convergence(&spec, &REFINEMENT_SEGMENTS)?;
        let at_1e4 = &r.levels[1];
        let err = at_1e4.rel_error_area.max(at_1e4.rel_error_perimeter);
        let orders_ok = [r.area_order, r.perimeter_order].iter().flatten().all(|&o| in_order_range(o));
        pass &= err < 1e-3 && orders_ok;
        let fmt = |o: Option<f64>| o.map_or("n/a".to_string(), |o| format!("{o:.2}"));
        notes.push(format!(
            "{}({}) err {err:.1e} order A {} P {}",
            spec.id,
            spec.parameter,
            fmt(r.area_order),
            fmt(r.perimeter_order)
        ));
    }
    Ok((pass, notes.join("; ")))
}

fn stationarity_boundaries() -> Result<Vec<(String, Density, crate::boundary::Boundary)>> {
    let mut out = Vec::new();
    let strip2 = Density::strip(2.0)?;
    out.push(("strip ii".into(), strip2, strip::boundary_ii(2.0 * PI)?));
    for h in [0.2, 0.5, 0.9, 1.0] {
        out.push((format!("strip iii h={h}"), strip2, strip::boundary_iii(h, 2.0)?));
        out.push((format!("strip iv h={h}"), strip2, strip::boundary_iv(h, 2.0)?));
    }
    let ball2 = Density::ball(2.0)?;
    for a in [0.3, PI - 0.5f64.acos(), 2.5] {
        out.push((format!("ball b alpha={a:.4}"), ball2, ball::boundary_b(a, 2.0)?));
    }
    let ball_half = Density::ball(0.5)?;
    out.push(("ball B beta=1".into(), ball_half, ball::boundary_B(1.0, 0.5)?));
    for bh in [0.3, 0.25 * PI, 1.2] {
        out.push((format!("ball C beta_hat={bh:.4}"), ball_half, ball::boundary_C(bh, 0.5)?));
    }
    for lambda in [1.01, 2.0, 10.0] {
        out.push((format!("line lambda={lambda}"), Density::line(lambda)?, strip::line_boundary(lambda)?));
    }
    Ok(out)
}

fn line_curvature(points: Vec<Point>) -> Result<f64> {
    let c = CurveSample::from_points(&points, &Density::gauss_mod(), false)?;
    Ok(stationarity::generalized_curvature(&c, CONSTANCY_TOL)?.max_deviation)
}

fn c11() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_name = String::new();
    let mut orthogonality: f64 = 0.0;
    for (name, density, boundary) in stationarity_boundaries()? {
        for check in stationarity::junction_checks(&density, &boundary, 1e-9)? {
            let defect = match check {
                JunctionCheck::Refraction { residual, corner } => {
                    if name.starts_with("ball C") {
                        orthogonality = orthogonality
                            .max((corner.alpha_plus - 0.5 * PI).abs())
                            .max((corner.alpha_minus - 0.5 * PI).abs());
                    }
                    residual.abs()
                }
                JunctionCheck::Contact { check, .. } => (-check.margin).max(0.0),
                // Junctions off Γ must be smooth.
                JunctionCheck::Smooth { kink, .. } => kink,
            };
            if defect > worst {
                worst = defect;
                worst_name = name.clone();
            }
        }
    }
    let ys = linspace(2.0, -2.0, 1000);
    let c = 0.7;
    let vertical = line_curvature(ys.iter().map(|&y| Point::new(c, y)).collect())?;
    let xs = linspace(-2.0, 2.0, 1000);
    let horizontal = line_curvature(xs.iter().map(|&x| Point::new(x, c)).collect())?;
    let circle: Vec<Point> =
        (0..1000).map(|k| Point::new(0.5, 0.0) + Point::polar(2.0 * PI * k as f64 / 1000.0)).collect();
    let cs = CurveSample::from_points(&circle, &Density::gauss_mod(), true)?;
    let circle_dev = stationarity::generalized_curvature(&cs, CONSTANCY_TOL)?.max_deviation;
    let pass = worst < 1e-9 && orthogonality < 1e-9 && vertical < 1e-12 && horizontal < 1e-12 && circle_dev > 0.1;
    Ok((
        pass,
        format!(
            "worst junction defect {worst:.1e} ({worst_name}); C orthogonality {orthogonality:.1e}; \
             line curvature deviation {vertical:.1e}/{horizontal:.1e}; off-center circle {circle_dev:.3}"
        ),
    ))
}

fn c12() -> Outcome {
    let cone = CalibrationCase::cone();
    let r = calibration::calibration_residuals(&cone, 0.05)?;
    let div = calibration::divergence_refinement(&cone, 0.05, 3)?;
    let mse = calibration::mse_refinement(&GraphExample::ExpX { a: 0.0, b: 1.0 }, 51, 3)?;
    let (d, m) = (div.order.unwrap_or(f64::NAN), mse.order.unwrap_or(f64::NAN));
    let pass = r.norm_excess <= 1e-12 && r.normal_mismatch < 1e-10 && in_order_range(d) && in_order_range(m);
    Ok((
        pass,
        format!(
            "|g| - 1 <= {:.1e}, normal mismatch {:.1e}, div order {d:.3}, exp-x graph order {m:.3}",
            r.norm_excess, r.normal_mismatch
        ),
    ))
}
