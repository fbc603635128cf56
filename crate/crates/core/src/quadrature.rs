//! Globally adaptive Gauss–Kronrod (10/21) quadrature with infinite-range maps.

use crate::error::{eval_err, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Integral estimate with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Stop once the error is below this fraction of ∫|f|.
    pub l1_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { abs_tol: 0.0, rel_tol: 1e-11, l1_tol: 2e-14, max_intervals: 4000 }
    }
}

struct Piece {
    seg: usize,
    a: f64,
    b: f64,
    val: f64,
    err: f64,
    l1: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.partial_cmp(&o.err).unwrap_or(Ordering::Equal)
    }
}

fn gk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut fl = [0.0; 10];
    let mut fr = [0.0; 10];
    let mut rk = fc * WGK[10];
    let mut rg = 0.0;
    let mut l1 = fc.abs() * WGK[10];
    for j in 0..10 {
        let x = h * XGK[j];
        fl[j] = f(c - x);
        fr[j] = f(c + x);
        rk += WGK[j] * (fl[j] + fr[j]);
        l1 += WGK[j] * (fl[j].abs() + fr[j].abs());
        if j % 2 == 1 {
            rg += WG[j / 2] * (fl[j] + fr[j]);
        }
    }
    let val = rk * h;
    let mut err = ((rk - rg) * h).abs();
    // QUADPACK-style error scaling
    let mean = 0.5 * rk;
    let mut asc = (fc - mean).abs() * WGK[10];
    for j in 0..10 {
        asc += WGK[j] * ((fl[j] - mean).abs() + (fr[j] - mean).abs());
    }
    asc *= h.abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    let l1 = l1 * h.abs();
    if l1 > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * l1);
    }
    (val, err, l1)
}

/// Adaptive integration of several segment functions over finite intervals,
/// sharing one global error budget.
pub(crate) fn adaptive(
    fs: &[&dyn Fn(f64) -> f64],
    intervals: &[(usize, f64, f64)],
    opts: &QuadOptions,
) -> Result<Estimate> {
    let mut heap = BinaryHeap::new();
    let (mut total, mut err, mut l1) = (0.0, 0.0, 0.0);
    for &(seg, a, b) in intervals {
        if a == b {
            continue;
        }
        let (v, e, l) = gk21(fs[seg], a, b);
        total += v;
        err += e;
        l1 += l;
        heap.push(Piece { seg, a, b, val: v, err: e, l1: l });
    }
    if !total.is_finite() || !err.is_finite() {
        return eval_err("quadrature", format!("non-finite integrand (value {total})"));
    }
    let mut count = heap.len();
    loop {
        let target = opts.abs_tol.max(opts.rel_tol * total.abs()).max(opts.l1_tol * l1);
        if err <= target || count >= opts.max_intervals {
            break;
        }
        let Some(p) = heap.pop() else { break };
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            heap.push(Piece { err: 0.0, ..p });
            continue;
        }
        let (v1, e1, l11) = gk21(fs[p.seg], p.a, mid);
        let (v2, e2, l12) = gk21(fs[p.seg], mid, p.b);
        total += v1 + v2 - p.val;
        err += e1 + e2 - p.err;
        l1 += l11 + l12 - p.l1;
        heap.push(Piece { seg: p.seg, a: p.a, b: mid, val: v1, err: e1, l1: l11 });
        heap.push(Piece { seg: p.seg, a: mid, b: p.b, val: v2, err: e2, l1: l12 });
        count += 1;
        if !total.is_finite() {
            return eval_err("quadrature", "non-finite integrand during refinement");
        }
    }
    // re-sum to shed accumulated drift
    let (mut v, mut e) = (0.0, 0.0);
    for p in heap.iter() {
        v += p.val;
        e += p.err;
    }
    Ok(Estimate { value: v, abs_error: e })
}

/// ∫_a^b f with optional interior breakpoints.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, breaks: &[f64], opts: &QuadOptions) -> Result<Estimate> {
    let mut pts = vec![a];
    pts.extend(breaks.iter().copied().filter(|&x| x > a.min(b) && x < a.max(b)));
    pts.push(b);
    let last = pts.len() - 1;
    if a > b {
        pts[1..last].sort_by(|x, y| y.partial_cmp(x).unwrap());
    } else {
        pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    }
    let iv: Vec<_> = pts.windows(2).map(|w| (0, w[0], w[1])).collect();
    adaptive(&[f], &iv, opts)
}

fn guard(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v
    }
}

/// ∫_0^∞ f(x) dx, integrated on the logarithmic axis with breakpoints at the
/// given characteristic scales. Tails are mapped onto finite intervals.
pub fn integrate_positive(f: &dyn Fn(f64) -> f64, scales: &[f64], opts: &QuadOptions) -> Result<Estimate> {
    let mut us: Vec<f64> = scales.iter().filter(|s| s.is_finite() && **s > 0.0).map(|s| s.ln()).collect();
    if us.is_empty() {
        us.push(0.0);
    }
    us.sort_by(|a, b| a.partial_cmp(b).unwrap());
    us.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    let (lo, hi) = (us[0] - 2.0, us[us.len() - 1] + 2.0);
    let g = move |u: f64| -> f64 {
        let x = u.exp();
        if x == 0.0 || !x.is_finite() {
            return 0.0;
        }
        guard(f(x) * x)
    };
    let lower = |t: f64| -> f64 {
        let s = t / (1.0 - t);
        guard(g(lo - s) / ((1.0 - t) * (1.0 - t)))
    };
    let upper = |t: f64| -> f64 {
        let s = t / (1.0 - t);
        guard(g(hi + s) / ((1.0 - t) * (1.0 - t)))
    };
    let mut pts = vec![lo];
    pts.extend(us.iter().copied());
    pts.push(hi);
    let mut iv: Vec<(usize, f64, f64)> = Vec::new();
    for w in pts.windows(2) {
        // keep panels a few e-folds wide so adaptivity starts from a sane grid
        let n = ((w[1] - w[0]) / 3.0).ceil().max(1.0) as usize;
        for k in 0..n {
            let a = w[0] + (w[1] - w[0]) * k as f64 / n as f64;
            let b = w[0] + (w[1] - w[0]) * (k + 1) as f64 / n as f64;
            iv.push((0, a, b));
        }
    }
    iv.push((1, 0.0, 0.5));
    iv.push((1, 0.5, 1.0));
    iv.push((2, 0.0, 0.5));
    iv.push((2, 0.5, 1.0));
    adaptive(&[&g, &lower, &upper], &iv, opts)
}

/// ∫_a^∞ f(x) dx via x = a + t/(1-t).
pub fn integrate_to_infinity(f: &dyn Fn(f64) -> f64, a: f64, opts: &QuadOptions) -> Result<Estimate> {
    let h = |t: f64| -> f64 {
        let s = t / (1.0 - t);
        guard(f(a + s) / ((1.0 - t) * (1.0 - t)))
    };
    adaptive(&[&h], &[(0, 0.0, 0.5), (0, 0.5, 1.0)], opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let e = integrate(&|x| x * x, 0.0, 3.0, &[], &QuadOptions::default()).unwrap();
        assert!((e.value - 9.0).abs() < 1e-13);
    }

    #[test]
    fn positive_axis_gamma() {
        // ∫ x^{-0.7} e^{-x} = Γ(0.3)
        let e = integrate_positive(&|x: f64| x.powf(-0.7) * (-x).exp(), &[1.0], &QuadOptions::default()).unwrap();
        assert!((e.value - 2.991_568_987_687_590_6).abs() < 1e-10, "{}", e.value);
    }

    #[test]
    fn wide_scales() {
        // ∫ 1/((1+x)(1+x/1e6)) dx = ln(1e6) * 1e6/(1e6-1)
        let want = 1e6f64.ln() * 1e6 / (1e6 - 1.0);
        let e = integrate_positive(&|x: f64| 1.0 / ((1.0 + x) * (1.0 + x / 1e6)), &[1.0, 1e6], &QuadOptions::default())
            .unwrap();
        assert!(((e.value - want) / want).abs() < 1e-10);
    }
}
