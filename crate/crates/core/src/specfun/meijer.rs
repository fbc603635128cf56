//! Meijer G-function for real parameters and positive argument, evaluated on a
//! vertical Mellin–Barnes contour.
//!
//! G^{m,n}_{p,q}(z) = (1/2πi) ∫ Φ(s) z^s ds with
//! Φ(s) = Π_{j≤m} Γ(b_j - s) Π_{k≤n} Γ(1 - a_k + s) / (Π_{j>m} Γ(1 - b_j + s) Π_{k>n} Γ(a_k - s)).
//! On Re s = c the integral folds to (z^c/π) ∫_0^∞ Re[Φ(c+iy) z^{iy}] dy.
//! The abscissa c is chosen inside the pole-separating strip where the
//! integrand is smallest, which keeps cancellation down.

use super::gamma::ln_gamma_c;
use crate::error::{domain, eval_err, Result};
use crate::quadrature::{adaptive, QuadOptions};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeijerSpec {
    pub m: usize,
    pub n: usize,
    /// a_1..a_p; the first n enter as Γ(1 - a_k + s).
    pub a: Vec<f64>,
    /// b_1..b_q; the first m enter as Γ(b_j - s).
    pub b: Vec<f64>,
}

impl MeijerSpec {
    pub fn new(m: usize, n: usize, a: Vec<f64>, b: Vec<f64>) -> Self {
        Self { m, n, a, b }
    }
    pub fn p(&self) -> usize {
        self.a.len()
    }
    pub fn q(&self) -> usize {
        self.b.len()
    }
    /// m + n - (p + q)/2; the straight contour converges for δ > 0.
    pub fn delta(&self) -> f64 {
        (self.m + self.n) as f64 - 0.5 * (self.p() + self.q()) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeijerValue {
    pub value: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct MeijerOptions {
    pub rel_tol: f64,
    /// Offset added to the automatically chosen abscissa (stays inside the strip).
    pub shift: f64,
}

impl Default for MeijerOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-13, shift: 0.0 }
    }
}

/// G^{m,n}_{p,q}(z | a; b) for z > 0.
pub fn meijer_g(spec: &MeijerSpec, z: f64) -> Result<MeijerValue> {
    meijer_g_with(spec, z, &MeijerOptions::default())
}

pub fn meijer_g_with(spec: &MeijerSpec, z: f64, opts: &MeijerOptions) -> Result<MeijerValue> {
    if !(z > 0.0) || !z.is_finite() {
        return domain("meijer_g", format!("requires finite z > 0, got {z}"));
    }
    let (v, e) = meijer_g_log(spec, z.ln(), 0.0, opts)?;
    Ok(MeijerValue { value: v, abs_error: e })
}

struct Prepared {
    num_minus: Vec<f64>, // Γ(b - s)
    num_plus: Vec<f64>,  // Γ(1 - a + s)
    den_plus: Vec<f64>,  // 1/Γ(1 - b + s)
    den_minus: Vec<f64>, // 1/Γ(a - s)
}

impl Prepared {
    fn ln_phi(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &b in &self.num_minus {
            acc += ln_gamma_c(b - s);
        }
        for &a in &self.num_plus {
            acc += ln_gamma_c(1.0 - a + s);
        }
        for &b in &self.den_plus {
            acc -= ln_gamma_c(1.0 - b + s);
        }
        for &a in &self.den_minus {
            acc -= ln_gamma_c(a - s);
        }
        acc
    }
}

/// exp(ln_pre) · G(e^{ln_z}), computed without forming z or the prefactor.
pub(crate) fn meijer_g_log(spec: &MeijerSpec, ln_z: f64, ln_pre: f64, opts: &MeijerOptions) -> Result<(f64, f64)> {
    let (m, n, p, q) = (spec.m, spec.n, spec.p(), spec.q());
    if m > q || n > p {
        return domain("meijer_g", format!("invalid orders m={m}, n={n}, p={p}, q={q}"));
    }
    if spec.a.iter().chain(spec.b.iter()).any(|x| !x.is_finite()) {
        return domain("meijer_g", "non-finite parameter");
    }
    let mut b = spec.b.clone();
    // a_k - b_j a positive integer makes a left and a right pole collide
    for j in 0..m {
        for k in 0..n {
            let d = spec.a[k] - b[j];
            if d > 0.5 && (d - d.round()).abs() < 1e-10 {
                b[j] += 1e-8 * (j as f64 + 1.0) * b[j].abs().max(1.0);
            }
        }
    }
    let delta = spec.delta();
    if delta <= 0.0 {
        return eval_err(
            "meijer_g",
            format!("straight contour diverges: m+n-(p+q)/2 = {delta} ≤ 0 (m={m}, n={n}, p={p}, q={q})"),
        );
    }
    let left = spec.a[..n].iter().map(|a| a - 1.0).fold(f64::NEG_INFINITY, f64::max);
    let right = b[..m].iter().copied().fold(f64::INFINITY, f64::min);
    if left >= right {
        return eval_err(
            "meijer_g",
            format!("no vertical contour separates the poles: max(a_k-1) = {left} ≥ min(b_j) = {right}; a={:?}, b={:?}", spec.a, b),
        );
    }
    let prep = Prepared {
        num_minus: b[..m].to_vec(),
        num_plus: spec.a[..n].to_vec(),
        den_plus: b[m..].to_vec(),
        den_minus: spec.a[n..].to_vec(),
    };
    let proxy = |c: f64| -> f64 {
        let r1 = prep.ln_phi(Complex64::new(c, 0.6)).re;
        let r2 = prep.ln_phi(Complex64::new(c, 1.7)).re;
        r1.max(r2) + c * ln_z
    };
    let c0 = choose_abscissa(&proxy, left, right);
    let c = c0 + opts.shift;
    if !(c > left && c < right) {
        return domain("meijer_g", format!("shifted abscissa {c} leaves the strip ({left}, {right})"));
    }
    let scale = prep.ln_phi(Complex64::new(c, 0.0)).re.max(proxy(c) - c * ln_z);
    let logf = |y: f64| -> Complex64 {
        let s = Complex64::new(c, y);
        prep.ln_phi(s) + Complex64::new(0.0, y * ln_z) - scale
    };
    // decay length: |Φ| ~ exp(-πδ|y|)
    let mut ymax = 2.0;
    let mut below = 0;
    while ymax < 1e5 {
        if logf(ymax).re < -48.0 {
            below += 1;
            if below >= 2 {
                break;
            }
        } else {
            below = 0;
        }
        ymax *= 1.25;
    }
    if ymax >= 1e5 {
        return eval_err("meijer_g", "integrand does not decay along the contour");
    }
    let f = |y: f64| -> f64 {
        let l = logf(y);
        if l.re < -745.0 {
            0.0
        } else {
            l.re.exp() * l.im.cos()
        }
    };
    let osc = ln_z.abs() + (p + q) as f64 * (2.0 + ymax).ln();
    let width = (PI / osc.max(1e-3)).min(1.0);
    let npan = ((ymax / width).ceil() as usize).clamp(8, 4000);
    let iv: Vec<_> = (0..npan).map(|k| (0, ymax * k as f64 / npan as f64, ymax * (k + 1) as f64 / npan as f64)).collect();
    let qo = QuadOptions { abs_tol: 0.0, rel_tol: opts.rel_tol, l1_tol: 2e-14, max_intervals: 20_000 };
    let est = adaptive(&[&f], &iv, &qo)?;
    let lf = ln_pre + c * ln_z + scale;
    let mag = lf.exp() / PI;
    let value = est.value * mag;
    let err = est.abs_error * mag + value.abs() * 1e-15;
    if !value.is_finite() {
        return eval_err("meijer_g", format!("value overflows (log magnitude {lf})"));
    }
    Ok((value, err))
}

/// Minimises the contour-integrand proxy over the open strip (left, right).
fn choose_abscissa(proxy: &dyn Fn(f64) -> f64, left: f64, right: f64) -> f64 {
    let (lo, hi) = match (left.is_finite(), right.is_finite()) {
        (true, true) => {
            let h = (right - left) * 0.02;
            (left + h, right - h)
        }
        (true, false) => (left + 0.1, expand(proxy, left + 0.1, 1.0)),
        (false, true) => (expand(proxy, right - 0.1, -1.0), right - 0.1),
        (false, false) => (-2.0, 2.0),
    };
    let k = 48;
    let mut best = (f64::INFINITY, 0.5 * (lo + hi));
    let pts: Vec<f64> = (0..=k).map(|i| lo + (hi - lo) * i as f64 / k as f64).collect();
    for &x in &pts {
        let v = proxy(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    // golden section inside the neighbouring grid cells
    let step = (hi - lo) / k as f64;
    let (mut a, mut b) = ((best.1 - step).max(lo), (best.1 + step).min(hi));
    let g = 0.618_033_988_749_894_9;
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (proxy(x1), proxy(x2));
    for _ in 0..40 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = proxy(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = proxy(x2);
        }
    }
    let c = 0.5 * (a + b);
    if proxy(c) <= best.0 {
        c
    } else {
        best.1
    }
}

/// Walks away from a finite strip edge while the proxy keeps decreasing.
fn expand(proxy: &dyn Fn(f64) -> f64, start: f64, dir: f64) -> f64 {
    let mut prev = proxy(start);
    let mut step = 1.0;
    let mut x = start;
    loop {
        let nx = x + dir * step;
        let v = proxy(nx);
        if !(v < prev) || step > 1e5 {
            return nx;
        }
        prev = v;
        x = nx;
        step *= 2.0;
    }
}
