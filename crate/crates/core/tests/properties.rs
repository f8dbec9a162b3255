use std::f64::consts::PI;

use isodens::ball;
use isodens::density::Density;
use isodens::gaussmod::{self, Orientation};
use isodens::geometry::Point;
use isodens::oracle::{weighted_area, weighted_perimeter, Polygon};
use isodens::special::{arc, erf, erfc};
use isodens::stationarity::{snell_residual, CornerSample};
use isodens::strip;
use proptest::prelude::*;

fn rotate(p: Point, t: f64) -> Point {
    let (s, c) = t.sin_cos();
    Point::new(c * p.x - s * p.y, s * p.x + c * p.y)
}

proptest! {
    #[test]
    fn snell_residual_is_odd_under_reflection(lambda in 1.01f64..20.0, a in 0.05f64..1.5) {
        // reflecting the crossing across the Γ normal flips both cosines
        let fm = 1.0 / lambda;
        let am = a;
        let ap = (fm * am.cos()).acos();
        let c = CornerSample::new(Point::ORIGIN, fm, 1.0, ap, am).unwrap();
        let m = CornerSample::new(Point::ORIGIN, fm, 1.0, PI - ap, PI - am).unwrap();
        prop_assert!(snell_residual(&c).unwrap().abs() < 1e-12);
        prop_assert!(snell_residual(&m).unwrap().abs() < 1e-12);
    }

    #[test]
    fn weighted_measures_ignore_orientation(
        lambda in 1.1f64..5.0,
        cx in -1.5f64..1.5,
        cy in -1.5f64..1.5,
        r in 0.3f64..1.5,
    ) {
        let pts: Vec<Point> = (0..400).map(|k| Point::new(cx, cy) + Point::polar(2.0 * PI * k as f64 / 400.0) * r).collect();
        let p = Polygon::closed(pts).unwrap();
        for d in [Density::strip(lambda).unwrap(), Density::ball(lambda).unwrap(), Density::ball(1.0 / lambda).unwrap()] {
            let (a, q) = (weighted_area(&p, &d).unwrap(), weighted_area(&p.reversed(), &d).unwrap());
            // signed area flips, perimeter does not
            prop_assert!((a + q).abs() <= 1e-12 * a.abs().max(1.0));
            prop_assert!((weighted_perimeter(&p, &d) - weighted_perimeter(&p.reversed(), &d)).abs() < 1e-12);
        }
    }

    #[test]
    fn ball_measures_are_rotation_invariant(lambda in 1.1f64..5.0, t in 0.0f64..std::f64::consts::TAU, cx in -1.0f64..1.0) {
        let pts: Vec<Point> = (0..300).map(|k| Point::new(cx, 0.3) + Point::polar(2.0 * PI * k as f64 / 300.0) * 0.8).collect();
        let d = Density::ball(lambda).unwrap();
        let p = Polygon::closed(pts.clone()).unwrap();
        let q = Polygon::closed(pts.into_iter().map(|x| rotate(x, t)).collect()).unwrap();
        prop_assert!((weighted_area(&p, &d).unwrap() - weighted_area(&q, &d).unwrap()).abs() < 1e-11);
    }

    #[test]
    fn gauss_line_volume_decreases_with_offset(t in 0.0f64..3.0, dt in 1e-3f64..1.0) {
        for o in [Orientation::Horizontal, Orientation::Vertical] {
            prop_assert!(gaussmod::profile(o, t + dt).unwrap().volume < gaussmod::profile(o, t).unwrap().volume);
        }
    }

    #[test]
    fn equal_volume_maps_are_inverse(y in 0.01f64..1.5) {
        let x = gaussmod::equal_volume_x(y).unwrap();
        prop_assert!((gaussmod::equal_volume_y(x).unwrap() - y).abs() < 1e-9);
    }

    #[test]
    fn erf_and_erfc_are_complementary(x in -6.0f64..6.0) {
        prop_assert!((erf(x) + erfc(x) - 1.0).abs() < 1e-15);
        prop_assert!((erf(-x) + erf(x)).abs() < 1e-16);
    }

    #[test]
    fn arc_is_increasing_and_beats_the_chord(x in 1e-4f64..5.0, dx in 1e-4f64..1.0) {
        prop_assert!(arc(x).unwrap() > 1.0);
        prop_assert!(arc(x + dx).unwrap() > arc(x).unwrap());
    }

    #[test]
    fn strip_best_profile_never_beats_family_i_or_ii(lambda in 1.05f64..20.0, v in 0.1f64..30.0) {
        let best = strip::best_profile(v, lambda).unwrap();
        let base = if v <= PI { strip::profile_i(v).unwrap() } else { strip::profile_ii(v).unwrap() };
        prop_assert!(best.perimeter <= base);
    }

    #[test]
    fn ball_family_c_beats_the_plain_disk(lambda in 0.05f64..0.95, bh in 0.01f64..1.56) {
        let c = ball::profile_C(bh, lambda).unwrap();
        prop_assert!(c.perimeter * c.perimeter > 4.0 * lambda * PI * c.area);
    }
}
