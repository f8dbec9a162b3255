//! Gauss-mod line profiles against direct quadrature references.

use approx::assert_relative_eq;
use isodens::density::Density;
use isodens::gaussmod::{crossover_y, horizontal_profile, vertical_profile};

#[test]
fn line_volumes_match_direct_integration() {
    assert_relative_eq!(horizontal_profile(0.5).unwrap().volume, 0.731_217_889_577_006_8, max_relative = 1e-12);
    assert_relative_eq!(vertical_profile(0.5).unwrap().volume, 0.770_344_067_264_882, max_relative = 1e-12);
}

#[test]
fn total_mass() {
    assert_relative_eq!(Density::gauss_mod().total_mass(), 3.213_113_121_854_558, max_relative = 1e-13);
}

#[test]
fn crossover_matches_reference_root() {
    let c = crossover_y().unwrap();
    assert!((c.y_star - 0.154_195_799_168_146_2).abs() < 1e-10, "{}", c.y_star);
    assert!((c.x_star - 0.151_906_931_278_056_4).abs() < 1e-10, "{}", c.x_star);
    let h = horizontal_profile(c.y_star).unwrap();
    let v = vertical_profile(c.x_star).unwrap();
    assert_relative_eq!(h.volume, v.volume, max_relative = 1e-12);
    assert_relative_eq!(h.perimeter, v.perimeter, max_relative = 1e-9);
}
