//! Special functions against 30-digit reference values.

use std::f64::consts::PI;

use approx::assert_relative_eq;
use isodens::special::{arc, arc_derivative, erf, erfc, gamma, lower_incomplete_gamma, upper_incomplete_gamma};

#[test]
fn gamma_reference_values() {
    let cases = [
        (0.1, 9.513_507_698_668_731),
        (0.5, 1.772_453_850_905_516),
        (1.25, 0.906_402_477_055_477_1),
        (4.5, 11.631_728_396_567_449),
        (10.3, 716_430.689_062_376_4),
    ];
    for (x, want) in cases {
        assert_relative_eq!(gamma(x), want, max_relative = 1e-13);
    }
    // near overflow the rounding of t^(x-1/2) grows like x log x · eps
    assert_relative_eq!(gamma(171.3), 3.391_673_609_972_721e307, max_relative = 1e-12);
}

#[test]
fn incomplete_gamma_reference_values() {
    let upper = [
        (0.25, 0.0625, 1.650_182_066_412_482_8),
        (0.25, 1.5, 0.121_154_991_040_338_49),
        (2.5, 3.0, 0.407_069_175_871_303),
        (0.25, 20.0, 2.103_994_898_557_164_5e-10),
    ];
    for (a, x, want) in upper {
        assert_relative_eq!(upper_incomplete_gamma(a, x).unwrap(), want, max_relative = 1e-12);
    }
    let lower = [(1.5, 0.7, 0.260_963_049_817_618_23), (0.25, 0.01, 1.262_388_253_037_052_7)];
    for (a, x, want) in lower {
        assert_relative_eq!(lower_incomplete_gamma(a, x).unwrap(), want, max_relative = 1e-12);
    }
}

#[test]
fn erf_reference_values() {
    assert_relative_eq!(erf(0.3), 0.328_626_759_459_127_4, max_relative = 1e-14);
    assert_relative_eq!(erf(-1.7), -0.983_790_458_590_774_6, max_relative = 1e-14);
    assert_relative_eq!(erf(2.5), 0.999_593_047_982_555, max_relative = 1e-14);
    assert_relative_eq!(erfc(2.5), 4.069_520_174_449_589_4e-4, max_relative = 1e-13);
    assert_relative_eq!(erfc(-1.2), 1.910_313_978_229_635_4, max_relative = 1e-14);
    assert_relative_eq!(erfc(6.0), 2.151_973_671_249_891_3e-17, max_relative = 1e-12);
}

#[test]
fn arc_reference_values() {
    for (x, want) in [(0.1, 1.057_016_618_414_685), (0.3, 1.386_733_343_416_514_7), (1.0, 2.683_129_777_859_848)] {
        assert_relative_eq!(arc(x).unwrap(), want, max_relative = 1e-13);
    }
    // the half circle over a unit chord
    assert_relative_eq!(arc(PI / 8.0).unwrap(), PI / 2.0, max_relative = 1e-14);
    assert_relative_eq!(arc_derivative(PI / 8.0).unwrap(), 2.0, max_relative = 1e-12);
}
