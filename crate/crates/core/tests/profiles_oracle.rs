//! Crossover volumes checked by sampling both competing boundaries and
//! comparing their polygonal weighted area and perimeter.

use std::f64::consts::PI;

use approx::assert_relative_eq;
use isodens::ball;
use isodens::boundary::Boundary;
use isodens::density::Density;
use isodens::oracle::{weighted_area, weighted_perimeter, Polygon};
use isodens::strip::{self, StripComparator, StripFamily};

const SEGMENTS: usize = 100_000;

fn measure(b: &Boundary, d: &Density) -> (f64, f64) {
    let poly = Polygon::closed(b.sample(SEGMENTS)).unwrap();
    (weighted_area(&poly, d).unwrap(), weighted_perimeter(&poly, d))
}

#[test]
fn strip_crossover_balances_ii_and_iii() {
    for lambda in [1.1, 2.0, 8.0] {
        let v0 = strip::crossover_v0(lambda).unwrap().volume;
        let d = Density::strip(lambda).unwrap();
        let best = StripComparator::new(lambda).unwrap().best_curved(v0).unwrap().unwrap();
        assert_eq!(best.family, StripFamily::III);
        let (a3, p3) = measure(&strip::boundary_iii(best.h.unwrap(), lambda).unwrap(), &d);
        let (a2, p2) = measure(&strip::boundary_ii(v0).unwrap(), &d);
        assert_relative_eq!(a3, v0, max_relative = 1e-7);
        assert_relative_eq!(a2, v0, max_relative = 1e-7);
        assert_relative_eq!(p3, p2, max_relative = 1e-7);
    }
}

fn alpha_for_area(v: f64, lambda: f64) -> f64 {
    let (mut lo, mut hi) = (1e-9, PI - 1e-9);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if ball::profile_b(mid, lambda).unwrap().point.area < v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn ball_gt1_crossover_balances_a_and_b() {
    for (lambda, v0) in [(1.1, 2.916_72), (2.0, 4.594_20), (8.0, 21.478_7)] {
        let c = ball::crossover_gt1(lambda).unwrap();
        assert!((c.volume - v0).abs() < 1e-4, "{lambda}: {}", c.volume);
        let d = Density::ball(lambda).unwrap();
        let alpha = alpha_for_area(c.volume, lambda);
        let (ab, pb) = measure(&ball::boundary_b(alpha, lambda).unwrap(), &d);
        let (aa, pa) = measure(&ball::boundary_a(c.volume).unwrap(), &d);
        assert_relative_eq!(ab, c.volume, max_relative = 1e-7);
        assert_relative_eq!(aa, c.volume, max_relative = 1e-7);
        assert_relative_eq!(pa, pb, max_relative = 1e-7);
    }
}

#[test]
fn ball_lt1_crossover_balances_b_and_c() {
    let lambda = 0.5;
    let x = ball::crossover_lt1(lambda).unwrap();
    // root located independently with a scalar solver
    assert!((x.v1.volume - 2.349_911).abs() < 2e-6, "{}", x.v1.volume);
    assert_eq!(x.sign_changes, 1);
    let d = Density::ball(lambda).unwrap();
    let v = x.v1.volume;
    let (a_b, p_b) = measure(&ball::boundary_B(ball::beta_B_for_area(v, lambda).unwrap(), lambda).unwrap(), &d);
    let (a_c, p_c) = measure(&ball::boundary_C(ball::beta_C_for_area(v, lambda).unwrap(), lambda).unwrap(), &d);
    assert_relative_eq!(a_b, v, max_relative = 1e-7);
    assert_relative_eq!(a_c, v, max_relative = 1e-7);
    assert_relative_eq!(p_b, p_c, max_relative = 1e-7);
}

#[test]
fn large_area_offsets() {
    for lambda in [0.2, 0.5, 0.8] {
        let (ob, oc) = ball::asymptotic_offsets(lambda).unwrap();
        let beta = 1e-4;
        let b = ball::profile_B(beta, lambda).unwrap();
        let r = ball::radius_B(beta, lambda);
        assert!((b.perimeter - 2.0 * PI * r - ob).abs() < 1e-3, "B {lambda}");
        let bh = 1e-4;
        let c = ball::profile_C(bh, lambda).unwrap();
        assert!((c.perimeter - 2.0 * PI / bh.tan() - oc).abs() < 1e-3, "C {lambda}");
        assert_relative_eq!(ball::large_area_gap(lambda).unwrap(), 0.5 * (ob - oc), max_relative = 1e-15);
    }
}

#[test]
fn line_candidate_matches_polygon() {
    for lambda in [1.01, 2.0, 10.0] {
        let d = Density::line(lambda).unwrap();
        let c = strip::line_candidate(lambda).unwrap();
        let (a, p) = measure(&strip::line_boundary(lambda).unwrap(), &d);
        assert_relative_eq!(a, c.area, max_relative = 1e-8);
        assert_relative_eq!(p, c.perimeter, max_relative = 1e-8);
        assert_relative_eq!(strip::line_density_ratio(lambda).unwrap(), p * p / a, max_relative = 1e-7);
    }
}

#[test]
fn strip_family_ii_closed_form() {
    for v in [PI, 5.0, 20.0] {
        assert_relative_eq!(strip::profile_ii(v).unwrap(), v + PI, max_relative = 1e-15);
    }
    assert_relative_eq!(strip::profile_i(2.0).unwrap(), 2.0 * (2.0 * PI).sqrt(), max_relative = 1e-15);
}
