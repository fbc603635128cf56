//! Seeded Monte Carlo simulation of the relayed link.
//!
//! Draws are split into `n_streams` ChaCha8 substreams keyed by (seed, index).
//! Each stream keeps its own running mean and variance and the partial results
//! are merged in index order, so the estimate is bit-identical for any thread
//! count.

use crate::analytic::{Hops, Modulation, Scenario};
use crate::channel::{FadingParams, PointingParams, ThzHop};
use crate::error::{domain, Result};
use crate::specfun::reg_upper_gamma;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Smallest sample count an estimator accepts.
pub const MIN_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McOptions {
    pub n_samples: usize,
    pub seed: u64,
    pub n_streams: usize,
}

impl Default for McOptions {
    fn default() -> Self {
        Self { n_samples: 1_000_000, seed: 1, n_streams: 64 }
    }
}

impl McOptions {
    pub fn new(n_samples: usize, seed: u64) -> Self {
        Self { n_samples, seed, ..Default::default() }
    }
}

/// Sample mean with a 95% normal-approximation interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub std_error: f64,
    pub n_samples: usize,
    pub seed: u64,
    pub n_streams: usize,
}

impl McEstimate {
    pub fn contains(&self, x: f64) -> bool {
        self.ci_low <= x && x <= self.ci_high
    }
}

/// Generator for substream `index` of `seed`.
pub fn stream_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// α-μ envelope: Ω (G/μ)^{1/α} with G ~ Gamma(μ, 1).
pub fn sample_alpha_mu<R: Rng + ?Sized>(fading: &FadingParams, rng: &mut R) -> f64 {
    // shape and scale are validated when FadingParams is built
    let g: f64 = Gamma::new(fading.mu, 1.0).expect("valid gamma shape").sample(rng);
    fading.omega * (g / fading.mu).powf(1.0 / fading.alpha)
}

/// Pointing gain S0 exp(-2r²/w_zeq²), with the radial offset built from two
/// independent N(0, σ_s²/2) axes so that P(h ≤ x) = (x/S0)^φ.
pub fn sample_pointing<R: Rng + ?Sized>(params: &PointingParams, rng: &mut R) -> f64 {
    let sd = params.sigma_s() / std::f64::consts::SQRT_2;
    let x: f64 = rng.sample::<f64, _>(StandardNormal) * sd;
    let y: f64 = rng.sample::<f64, _>(StandardNormal) * sd;
    let r2 = x * x + y * y;
    params.s0 * (-2.0 * r2 / (params.w_zeq * params.w_zeq)).exp()
}

/// THz hop SNR γ1⁰ (h_f h_p)².
pub fn sample_thz_snr<R: Rng + ?Sized>(hop: &ThzHop, rng: &mut R) -> f64 {
    let h = sample_alpha_mu(&hop.fading, rng) * sample_pointing(&hop.pointing, rng);
    hop.gamma0 * h * h
}

/// End-to-end SNR: min(γ1, γ2), or one hop alone for the direct links.
pub fn sample_e2e_snr<R: Rng + ?Sized>(s: &Scenario, rng: &mut R) -> f64 {
    let rf = |rng: &mut R| {
        let h = sample_alpha_mu(&s.rf.fading, rng);
        s.rf.gamma0 * h * h
    };
    match s.hops {
        Hops::Relay => {
            let g1 = sample_thz_snr(&s.thz, rng);
            g1.min(rf(rng))
        }
        Hops::ThzOnly => sample_thz_snr(&s.thz, rng),
        Hops::RfOnly => rf(rng),
    }
}

#[derive(Clone, Copy, Default)]
struct Acc {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Acc {
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }
    fn merge(self, o: Acc) -> Acc {
        if o.n == 0.0 {
            return self;
        }
        let n = self.n + o.n;
        let d = o.mean - self.mean;
        Acc { n, mean: self.mean + d * o.n / n, m2: self.m2 + o.m2 + d * d * self.n * o.n / n }
    }
}

fn split(opts: &McOptions) -> Vec<(usize, usize)> {
    let k = opts.n_streams.max(1);
    (0..k).map(|i| (i, opts.n_samples / k + usize::from(i < opts.n_samples % k))).collect()
}

fn check(op: &'static str, opts: &McOptions) -> Result<()> {
    if opts.n_samples < MIN_SAMPLES {
        return domain(op, format!("needs at least {MIN_SAMPLES} samples, got {}", opts.n_samples));
    }
    Ok(())
}

/// Mean of `stat(γ)` over end-to-end SNR draws.
pub fn mc_expectation<F>(s: &Scenario, stat: F, opts: &McOptions) -> Result<McEstimate>
where
    F: Fn(f64) -> f64 + Sync,
{
    check("mc_expectation", opts)?;
    let parts: Vec<Acc> = split(opts)
        .into_par_iter()
        .map(|(i, n)| {
            let mut rng = stream_rng(opts.seed, i);
            let mut acc = Acc::default();
            for _ in 0..n {
                acc.push(stat(sample_e2e_snr(s, &mut rng)));
            }
            acc
        })
        .collect();
    let acc = parts.into_iter().fold(Acc::default(), Acc::merge);
    let se = (acc.m2 / (acc.n - 1.0) / acc.n).sqrt();
    Ok(McEstimate {
        mean: acc.mean,
        ci_low: acc.mean - 1.96 * se,
        ci_high: acc.mean + 1.96 * se,
        std_error: se,
        n_samples: opts.n_samples,
        seed: opts.seed,
        n_streams: opts.n_streams,
    })
}

/// P(γ ≤ γ_th).
pub fn mc_outage(s: &Scenario, gamma_th: f64, opts: &McOptions) -> Result<McEstimate> {
    if !(gamma_th >= 0.0) {
        return domain("mc_outage", format!("threshold must be non-negative, got {gamma_th}"));
    }
    mc_expectation(s, |g| if g <= gamma_th && gamma_th > 0.0 { 1.0 } else { 0.0 }, opts)
}

pub fn mc_mean_snr(s: &Scenario, opts: &McOptions) -> Result<McEstimate> {
    mc_expectation(s, |g| g, opts)
}

/// E[γⁿ].
pub fn mc_moment(s: &Scenario, n: f64, opts: &McOptions) -> Result<McEstimate> {
    mc_expectation(s, |g| g.powf(n), opts)
}

/// E[log2(1 + γ)].
pub fn mc_capacity(s: &Scenario, opts: &McOptions) -> Result<McEstimate> {
    mc_expectation(s, |g| g.ln_1p() / std::f64::consts::LN_2, opts)
}

/// Average of the conditional error probability Γ(p, qγ)/(2Γ(p)) per draw.
pub fn mc_ber(s: &Scenario, m: &Modulation, opts: &McOptions) -> Result<McEstimate> {
    let (p, q) = (m.p, m.q);
    if p == 1.0 {
        return mc_expectation(s, |g| 0.5 * (-q * g).exp(), opts);
    }
    mc_expectation(s, |g| 0.5 * reg_upper_gamma(p, q * g).unwrap_or(f64::NAN), opts)
}

/// `n` end-to-end SNR draws in stream order.
pub fn sample_snrs(s: &Scenario, opts: &McOptions) -> Vec<f64> {
    split(opts)
        .into_par_iter()
        .map(|(i, n)| {
            let mut rng = stream_rng(opts.seed, i);
            (0..n).map(|_| sample_e2e_snr(s, &mut rng)).collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Kolmogorov–Smirnov distance between a sample and a continuous CDF.
pub fn ks_distance(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut x = samples.to_vec();
    x.sort_by(|a, b| a.total_cmp(b));
    let n = x.len() as f64;
    x.iter().enumerate().fold(0.0, |d, (i, &v)| {
        let f = cdf(v);
        d.max((f - i as f64 / n).abs()).max(((i + 1) as f64 / n - f).abs())
    })
}

/// γ̄⁽²⁾/(γ̄⁽¹⁾)² - 1 from one set of draws; the interval comes from the
/// delta method on the joint sample moments.
pub fn mc_amount_of_fading(s: &Scenario, opts: &McOptions) -> Result<McEstimate> {
    check("mc_amount_of_fading", opts)?;
    let parts: Vec<[f64; 4]> = split(opts)
        .into_par_iter()
        .map(|(i, n)| {
            let mut rng = stream_rng(opts.seed, i);
            let mut p = [0.0; 4];
            for _ in 0..n {
                let g = sample_e2e_snr(s, &mut rng);
                let g2 = g * g;
                p[0] += g;
                p[1] += g2;
                p[2] += g2 * g;
                p[3] += g2 * g2;
            }
            p
        })
        .collect();
    let n = opts.n_samples as f64;
    let mut m = [0.0; 4];
    for p in &parts {
        for k in 0..4 {
            m[k] += p[k];
        }
    }
    let [m1, m2, m3, m4] = m.map(|v| v / n);
    let aof = m2 / (m1 * m1) - 1.0;
    let (d1, d2) = (-2.0 * m2 / (m1 * m1 * m1), 1.0 / (m1 * m1));
    let var = d1 * d1 * (m2 - m1 * m1) + 2.0 * d1 * d2 * (m3 - m1 * m2) + d2 * d2 * (m4 - m2 * m2);
    let se = (var.max(0.0) / n).sqrt();
    Ok(McEstimate {
        mean: aof,
        ci_low: aof - 1.96 * se,
        ci_high: aof + 1.96 * se,
        std_error: se,
        n_samples: opts.n_samples,
        seed: opts.seed,
        n_streams: opts.n_streams,
    })
}
