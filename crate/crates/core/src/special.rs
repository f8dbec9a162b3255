//! Gamma, incomplete Gamma, error function and the unit-chord arc function.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{segment_over_sin2, t_over_sin};
use crate::numeric::newton_bisect;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real x that is not a nonpositive integer.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // Split the power so Γ stays finite up to its overflow point near 171.6.
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * acc
}

fn check_incomplete_args(a: f64, x: f64) -> Result<()> {
    if !(a > 0.0 && a <= 10.0) {
        return Err(Error::domain(format!("incomplete gamma order {a} outside (0, 10]")));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(format!("incomplete gamma argument {x} is negative")));
    }
    Ok(())
}

// γ(a, x) by the power series, valid and fast for x < a + 1.
fn lower_series(a: f64, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut n = a;
    for _ in 0..500 {
        n += 1.0;
        term *= x / n;
        sum += term;
        if term.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    sum * (-x + a * x.ln()).exp()
}

// Γ(a, x) by the Legendre continued fraction (modified Lentz), for x ≥ a + 1.
fn upper_continued_fraction(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x + a * x.ln()).exp() * h
}

/// Γ(a, x) = ∫ₓ^∞ t^{a−1} e^{−t} dt for a ∈ (0, 10], x ≥ 0.
pub fn upper_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    check_incomplete_args(a, x)?;
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        Ok(gamma(a) - lower_series(a, x))
    } else {
        Ok(upper_continued_fraction(a, x))
    }
}

/// γ(a, x) = ∫₀ˣ t^{a−1} e^{−t} dt for a ∈ (0, 10], x ≥ 0.
pub fn lower_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    check_incomplete_args(a, x)?;
    if x.is_infinite() {
        return Ok(gamma(a));
    }
    if x < a + 1.0 {
        Ok(lower_series(a, x))
    } else {
        Ok(gamma(a) - upper_continued_fraction(a, x))
    }
}

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

// erf by the all-positive series 2/√π e^{−x²} Σ 2ⁿ x^{2n+1} / (2n+1)!!.
// No cancellation, but rounding builds up with the term count, so it is
// only used below 1.5.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0;
    for _ in 0..200 {
        k += 2.0;
        term *= 2.0 * x2 / k;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    FRAC_2_SQRT_PI * (-x2).exp() * sum
}

// erfc(x) = Γ(1/2, x²)/√π for x ≥ 1.5, where the continued fraction converges.
fn erfc_cf(x: f64) -> f64 {
    upper_continued_fraction(0.5, x * x) / PI.sqrt()
}

pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    let ax = x.abs();
    let v = if ax < 1.5 { erf_series(ax) } else { 1.0 - erfc_cf(ax) };
    v.copysign(x)
}

/// 1 − erf(x), accurate in relative terms on the right tail.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x >= 1.5 {
        erfc_cf(x)
    } else if x > -1.5 {
        1.0 - erf(x)
    } else {
        2.0 - erfc_cf(-x)
    }
}

/// A circular arc over a unit chord, parametrized by its central half-angle
/// θ ∈ (0, π). θ = π/2 is the half circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcParametrization {
    pub theta: f64,
}

impl ArcParametrization {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(format!("arc half-angle {theta} outside (0, π)")));
        }
        Ok(ArcParametrization { theta })
    }

    pub fn radius(&self) -> f64 {
        0.5 / self.theta.sin()
    }

    /// Area between the arc and its chord.
    pub fn area(&self) -> f64 {
        arc_area(self.theta)
    }

    pub fn length(&self) -> f64 {
        t_over_sin(self.theta)
    }

    /// Inverts the area map. Area 0 has no arc in the open parameter range.
    pub fn from_area(x: f64) -> Result<Self> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::domain(format!("arc area {x} must be positive and finite")));
        }
        // A(θ) ≈ π / (4 (π − θ)²) near π; start from that and widen.
        let mut eps = (PI / (4.0 * x)).sqrt().min(0.5);
        while arc_area(PI - eps) <= x {
            eps *= 0.5;
        }
        let root = newton_bisect(
            |t| (arc_area(t) - x, arc_area_derivative(t)),
            0.0,
            PI - eps,
            1e-16,
        )?;
        Ok(ArcParametrization { theta: root.x })
    }
}

fn arc_area(theta: f64) -> f64 {
    0.25 * segment_over_sin2(theta)
}

// dA/dθ = (sin³θ − cosθ (θ − sinθ cosθ)) / (2 sin³θ)
fn arc_area_derivative(theta: f64) -> f64 {
    if theta < 1e-3 {
        return 1.0 / 6.0 + theta * theta / 15.0;
    }
    let (s, c) = theta.sin_cos();
    let seg = theta - s * c;
    (s * s * s - c * seg) / (2.0 * s * s * s)
}

/// Length of the circular arc over a unit chord that encloses area `x`
/// against the chord. arc(0) = 1.
pub fn arc(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(ArcParametrization::from_area(x)?.length())
}

/// d arc / dx = 2 sin θ at the arc enclosing area `x`.
pub fn arc_derivative(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(2.0 * ArcParametrization::from_area(x)?.theta.sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{integrate, integrate_to_infinity, Tolerance};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    // Γ(a, x) = 4 ∫_{x^{1/4}}^∞ u^{4a−1} e^{−u⁴} du removes the t^{a−1} singularity.
    fn quadrature_upper_gamma(a: f64, x: f64) -> f64 {
        let lo = x.powf(0.25);
        let r = integrate_to_infinity(
            |u| 4.0 * u.powf(4.0 * a - 1.0) * (-u.powi(4)).exp(),
            lo,
            Tolerance::new(1e-15, 1e-14),
        )
        .unwrap();
        r.value
    }

    #[test]
    fn gamma_known_values() {
        assert!(rel(gamma(5.0), 24.0) < 1e-14);
        assert!(rel(gamma(0.5), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(1.25), 0.25 * gamma(0.25)) < 1e-14);
    }

    #[test]
    fn gamma_quarter_against_quadrature() {
        let oracle = quadrature_upper_gamma(0.25, 0.0);
        assert!(rel(gamma(0.25), oracle) < 1e-12, "{} vs {}", gamma(0.25), oracle);
    }

    #[test]
    fn incomplete_gamma_order_one_is_exponential() {
        for &x in &[0.0, 1.0, 2.0] {
            assert!(rel(upper_incomplete_gamma(1.0, x).unwrap(), (-x).exp()) < 1e-14);
        }
    }

    #[test]
    fn incomplete_gamma_against_quadrature() {
        for &a in &[0.25, 1.25] {
            for &x in &[0.0, 1e-4, 0.05, 0.3, 1.0, 1.2, 1.3, 2.0, 2.3, 4.0, 9.0, 20.0] {
                let v = upper_incomplete_gamma(a, x).unwrap();
                let o = quadrature_upper_gamma(a, x);
                assert!(rel(v, o) < 1e-10, "a={a} x={x}: {v} vs {o}");
            }
        }
    }

    #[test]
    fn incomplete_gamma_parts_sum_to_gamma() {
        for &a in &[0.25, 1.25] {
            for i in 0..40 {
                let x = 0.2 * i as f64;
                let s = upper_incomplete_gamma(a, x).unwrap() + lower_incomplete_gamma(a, x).unwrap();
                assert!(rel(s, gamma(a)) < 1e-12);
            }
        }
    }

    #[test]
    fn incomplete_gamma_domain() {
        assert!(upper_incomplete_gamma(0.0, 1.0).is_err());
        assert!(upper_incomplete_gamma(11.0, 1.0).is_err());
        assert!(upper_incomplete_gamma(1.0, -1.0).is_err());
    }

    #[test]
    fn erf_against_quadrature() {
        for &x in &[0.1, 0.5, 1.0, 2.0, 2.9, 3.1, 4.0] {
            let o = integrate(|t| FRAC_2_SQRT_PI * (-t * t).exp(), 0.0, x, Tolerance::new(1e-16, 1e-15))
                .unwrap()
                .value;
            assert!(rel(erf(x), o) < 1e-12, "x={x}");
            assert_eq!(erf(-x), -erf(x));
        }
        assert_eq!(erf(0.0), 0.0);
    }

    #[test]
    fn erfc_tail_against_quadrature() {
        for &x in &[1.0, 1.6, 2.5, 3.5, 5.0] {
            let o = integrate_to_infinity(|t| FRAC_2_SQRT_PI * (-t * t).exp(), x, Tolerance::new(1e-300, 1e-14))
                .unwrap()
                .value;
            assert!(rel(erfc(x), o) < 1e-11, "x={x}");
        }
    }

    #[test]
    fn arc_reference_points() {
        assert_eq!(arc(0.0).unwrap(), 1.0);
        assert!((arc(PI / 8.0).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((arc_derivative(PI / 8.0).unwrap() - 2.0).abs() < 1e-12);
        let t = 2.0 * PI / 3.0;
        let p = ArcParametrization::new(t).unwrap();
        assert!((arc(p.area()).unwrap() - t / t.sin()).abs() < 1e-12);
    }

    #[test]
    fn arc_parametrization_identities() {
        let half = ArcParametrization::new(PI / 2.0).unwrap();
        assert!((half.area() - PI / 8.0).abs() < 1e-15);
        assert!((half.length() - PI / 2.0).abs() < 1e-15);
        assert!((half.radius() - 0.5).abs() < 1e-15);
        for &x in &[1e-6, 0.01, 0.5, 3.0, 100.0] {
            let p = ArcParametrization::from_area(x).unwrap();
            assert!(rel(p.area(), x) < 1e-13);
        }
    }
}
