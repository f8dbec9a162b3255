//! Globally adaptive quadrature: Gauss–Kronrod (7, 15) on intervals and a
//! degree-5 Radon rule on triangles.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::geometry::Point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Sum of local error estimates.
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    /// Cap on the number of subregions kept in the work queue.
    pub max_regions: usize,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel, max_regions: 20_000 }
    }

    pub fn with_max_regions(mut self, n: usize) -> Self {
        self.max_regions = n;
        self
    }

    fn satisfied(&self, value: f64, error: f64) -> bool {
        error <= self.abs.max(self.rel * value.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(1e-13, 1e-12)
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Region<R> {
    error: f64,
    value: f64,
    region: R,
}

impl<R> PartialEq for Region<R> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<R> Eq for Region<R> {}
impl<R> PartialOrd for Region<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<R> Ord for Region<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Drives a best-first refinement loop shared by the 1-D and triangle
/// integrators. `rule` returns (value, error) for a region, `split` bisects it.
fn refine<R, E, S>(
    initial: Vec<R>,
    tol: Tolerance,
    evals_per_rule: usize,
    mut rule: E,
    mut split: S,
) -> Result<Integral>
where
    E: FnMut(&R) -> (f64, f64),
    S: FnMut(&R) -> Vec<R>,
{
    let mut heap = BinaryHeap::new();
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for region in initial {
        let (v, e) = rule(&region);
        evaluations += evals_per_rule;
        value += v;
        error += e;
        heap.push(Region { error: e, value: v, region });
    }
    let mut steps = 0usize;
    while !tol.satisfied(value, error) {
        steps += 1;
        if heap.len() >= tol.max_regions || !value.is_finite() {
            return Err(Error::QuadratureFailure {
                tolerance: tol.abs.max(tol.rel * value.abs()),
                estimate: error,
            });
        }
        let worst = heap.pop().expect("non-empty work queue");
        value -= worst.value;
        error -= worst.error;
        for child in split(&worst.region) {
            let (v, e) = rule(&child);
            evaluations += evals_per_rule;
            value += v;
            error += e;
            heap.push(Region { error: e, value: v, region: child });
        }
        // Re-sum occasionally so cancellation in the running totals does not
        // stall convergence.
        if steps % 256 == 0 {
            value = heap.iter().map(|r| r.value).sum();
            error = heap.iter().map(|r| r.error).sum();
        }
    }
    let value = heap.iter().map(|r| r.value).sum();
    let error = heap.iter().map(|r| r.error).sum();
    Ok(Integral { value, error, evaluations })
}

/// ∫ₐᵇ f(x) dx.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Integral> {
    if a == b {
        return Ok(Integral { value: 0.0, error: 0.0, evaluations: 0 });
    }
    refine(
        vec![(a, b)],
        tol,
        15,
        |&(lo, hi)| kronrod(&f, lo, hi),
        |&(lo, hi)| {
            let m = 0.5 * (lo + hi);
            vec![(lo, m), (m, hi)]
        },
    )
}

/// ∫ₐ^∞ f(x) dx through the substitution x = a + t/(1 − t).
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, tol: Tolerance) -> Result<Integral> {
    let g = |t: f64| {
        let s = 1.0 - t;
        let v = f(a + t / s) / (s * s);
        if v.is_finite() { v } else { 0.0 }
    };
    integrate(g, 0.0, 1.0, tol)
}

const RADON_A: f64 = 0.101_286_507_323_456_338_800_987_361_915_123; // (6 − √15)/21
const RADON_B: f64 = 0.470_142_064_105_115_089_770_441_209_513_122; // (6 + √15)/21
const RADON_WA: f64 = 0.125_939_180_544_827_152_595_683_945_500_181;
const RADON_WB: f64 = 0.132_394_152_788_506_180_737_649_387_833_152;
const RADON_WC: f64 = 0.225;

fn radon<F: Fn(Point) -> f64>(f: &F, t: &[Point; 3]) -> f64 {
    let [p, q, r] = *t;
    let at = |u: f64, v: f64| {
        let w = 1.0 - u - v;
        f(Point::new(w * p.x + u * q.x + v * r.x, w * p.y + u * q.y + v * r.y))
    };
    let c = 1.0 / 3.0;
    let a = RADON_A;
    let b = RADON_B;
    let sum = RADON_WC * at(c, c)
        + RADON_WA * (at(a, a) + at(1.0 - 2.0 * a, a) + at(a, 1.0 - 2.0 * a))
        + RADON_WB * (at(b, b) + at(1.0 - 2.0 * b, b) + at(b, 1.0 - 2.0 * b));
    let signed_area = 0.5 * (q - p).cross(r - p);
    sum * signed_area
}

fn quarter(t: &[Point; 3]) -> [[Point; 3]; 4] {
    let [p, q, r] = *t;
    let pq = p.midpoint(q);
    let qr = q.midpoint(r);
    let rp = r.midpoint(p);
    [[p, pq, rp], [pq, q, qr], [rp, qr, r], [pq, qr, rp]]
}

/// Sum of ∫_T f dA over triangles, each counted with the sign of its
/// orientation. Error per triangle is the change from one level of
/// four-way subdivision.
pub fn integrate_triangles<F: Fn(Point) -> f64>(
    f: F,
    triangles: &[[Point; 3]],
    tol: Tolerance,
) -> Result<Integral> {
    let rule = |t: &[Point; 3]| {
        let coarse = radon(&f, t);
        let fine: f64 = quarter(t).iter().map(|s| radon(&f, s)).sum();
        (fine, (fine - coarse).abs())
    };
    refine(triangles.to_vec(), tol, 35, rule, |t| quarter(t).to_vec())
}
