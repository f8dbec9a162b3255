//! Bracketed root finding and one-dimensional minimization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Golden ratio conjugate, `(√5 − 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    /// Function value at `x`.
    pub residual: f64,
    /// Final bracket.
    pub bracket: (f64, f64),
    pub iterations: u32,
}

/// Bisection on `[lo, hi]`, which must bracket a sign change.
///
/// Stops when the bracket is narrower than `x_tol` or the function value
/// falls below `f_tol` in magnitude.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, x_tol: f64, f_tol: f64) -> Result<Root>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(Root { x: a, residual: 0.0, bracket: (a, a), iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, residual: 0.0, bracket: (b, b), iterations: 0 });
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::NoRoot(format!(
            "no sign change on [{a}, {b}] (f = {fa:e}, {fb:e})"
        )));
    }
    let mut iterations = 0;
    let mut best = (a, fa);
    while iterations < 200 {
        iterations += 1;
        let m = 0.5 * (a + b);
        let fm = f(m);
        if !fm.is_finite() {
            return Err(Error::convergence(iterations, format!("non-finite value at {m}")));
        }
        if fm.abs() < best.1.abs() {
            best = (m, fm);
        }
        if fm == 0.0 || fm.abs() <= f_tol || (b - a) <= x_tol {
            return Ok(Root { x: m, residual: fm, bracket: (a, b), iterations });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if b - a <= f64::EPSILON * m.abs().max(1e-300) * 4.0 {
            return Ok(Root { x: best.0, residual: best.1, bracket: (a, b), iterations });
        }
    }
    Err(Error::convergence(iterations, "bisection did not converge"))
}

/// Newton's method safeguarded by a bisection bracket.
///
/// `fdf` returns the function value and its derivative. Newton steps that
/// leave the bracket, or fail to halve it, are replaced by bisection.
pub fn newton_bisect<F>(mut fdf: F, lo: f64, hi: f64, x_tol: f64) -> Result<Root>
where
    F: FnMut(f64) -> (f64, f64),
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let (fa, _) = fdf(a);
    let (fb, _) = fdf(b);
    if fa == 0.0 {
        return Ok(Root { x: a, residual: 0.0, bracket: (a, a), iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, residual: 0.0, bracket: (b, b), iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoRoot(format!("no sign change on [{a}, {b}]")));
    }
    let rising = fb > 0.0;
    let mut x = 0.5 * (a + b);
    let mut last_width = b - a;
    for iterations in 1..=200u32 {
        let (fx, dfx) = fdf(x);
        if fx == 0.0 {
            return Ok(Root { x, residual: 0.0, bracket: (x, x), iterations });
        }
        if (fx > 0.0) == rising {
            b = x;
        } else {
            a = x;
        }
        let width = b - a;
        if width <= x_tol {
            return Ok(Root { x, residual: fx, bracket: (a, b), iterations });
        }
        let newton = x - fx / dfx;
        let bisect_step = !(dfx.is_finite() && dfx != 0.0)
            || !(newton > a && newton < b)
            || width > 0.5 * last_width;
        last_width = width;
        let next = if bisect_step { 0.5 * (a + b) } else { newton };
        if (next - x).abs() <= x_tol {
            let (fn_, _) = fdf(next);
            return Ok(Root { x: next, residual: fn_, bracket: (a, b), iterations });
        }
        x = next;
    }
    Err(Error::convergence(200, "safeguarded Newton did not converge"))
}

/// All sign changes of `values` over `grid`, as index pairs `(i, i + 1)`.
pub fn sign_changes(values: &[f64]) -> Vec<usize> {
    values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].is_finite() && w[1].is_finite() && (w[0] == 0.0 || w[0].signum() != w[1].signum()))
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub iterations: u32,
}

/// Golden-section search for a minimum of a unimodal function on `[lo, hi]`.
pub fn golden_section<F>(mut f: F, lo: f64, hi: f64, x_tol: f64) -> Minimum
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    while (b - a) > x_tol && iterations < 500 {
        iterations += 1;
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let (x, value) = if fc < fd { (c, fc) } else { (d, fd) };
    Minimum { x, value, iterations }
}

/// Grid scan followed by golden-section refinement around the best node.
/// Safe for functions that are unimodal only near the global minimum.
pub fn scan_minimize<F>(mut f: F, lo: f64, hi: f64, nodes: usize, x_tol: f64) -> Minimum
where
    F: FnMut(f64) -> f64,
{
    let n = nodes.max(3);
    let step = (hi - lo) / (n - 1) as f64;
    let mut best = (0usize, f64::INFINITY);
    for i in 0..n {
        let v = f(lo + step * i as f64);
        if v < best.1 {
            best = (i, v);
        }
    }
    let a = (lo + step * (best.0 as f64 - 1.0)).max(lo);
    let b = (lo + step * (best.0 as f64 + 1.0)).min(hi);
    golden_section(f, a, b, x_tol)
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14, 0.0).unwrap();
        assert!((r.x - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_missing_sign_change() {
        assert!(matches!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 0.0), Err(Error::NoRoot(_))));
    }

    #[test]
    fn newton_bisect_converges_on_cubic() {
        let r = newton_bisect(|x| (x * x * x - x - 2.0, 3.0 * x * x - 1.0), 1.0, 2.0, 1e-15).unwrap();
        assert!((r.x.powi(3) - r.x - 2.0).abs() < 1e-13);
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let m = golden_section(|x| (x - 0.3).powi(2) + 1.0, -1.0, 2.0, 1e-10);
        // a flat minimum only resolves x to about √ε
        assert!((m.x - 0.3).abs() < 1e-7);
        assert!((m.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sign_change_indices() {
        assert_eq!(sign_changes(&[1.0, 0.5, -0.2, -1.0, 3.0]), vec![1, 3]);
    }

    #[test]
    fn linspace_endpoints_exact() {
        let g = linspace(0.1, 0.7, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[6], 0.7);
    }
}
