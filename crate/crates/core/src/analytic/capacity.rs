use super::mellin::{int_alpha, integral, Atom, Val};
use super::{int_mu, Hops, Scenario};
use crate::error::{domain, Result};
use crate::quadrature::{integrate_positive, QuadOptions};
use crate::specfun::{digamma, gamma_unchecked};
use serde::Serialize;
use std::f64::consts::LN_2;

/// Lower bound E[log2 γ1] on the direct THz capacity.
pub fn capacity_lb_thz(s: &Scenario) -> Result<f64> {
    let (a, m, phi) = (s.thz.fading.alpha, s.thz.fading.mu, s.thz.pointing.phi);
    let c1 = s.thz.c1();
    let k = s.thz.cdf_coef() * gamma_unchecked(m);
    Ok(k * (-2.0 * (a + phi * c1.ln()) + a * phi * s.thz.gamma0.ln() + 2.0 * phi * digamma(m)?) / (a * phi * LN_2))
}

/// Lower bound E[log2 γ2] on the direct RF capacity.
pub fn capacity_lb_rf(s: &Scenario) -> Result<f64> {
    let (a, m) = (s.rf.fading.alpha, s.rf.fading.mu);
    Ok((-2.0 * s.rf.b2().ln() + a * s.rf.gamma0.ln() + 2.0 * digamma(m)?) / (a * LN_2))
}

/// Exact direct THz capacity E[log2(1+γ1)] in closed form.
pub fn capacity_thz(s: &Scenario) -> Result<f64> {
    let al = int_alpha("capacity_thz", s.thz.fading.alpha)?;
    let (m, b1) = (s.thz.fading.mu, s.thz.b1());
    let c1 = s.c1();
    let coef = s.thz.cdf_coef();
    let a = integral(1.0, &[Atom::rational(), Atom::upper(m, c1, al)])?;
    let b = integral(1.0 + s.thz.pointing.phi / 2.0, &[Atom::rational(), Atom::upper(b1, c1, al)])?;
    Ok(coef * (a.value - c1.powf(s.thz.pointing.phi / s.thz.fading.alpha) * b.value) / LN_2)
}

/// Exact direct RF capacity E[log2(1+γ2)] in closed form.
pub fn capacity_rf(s: &Scenario) -> Result<f64> {
    let al = int_alpha("capacity_rf", s.rf.fading.alpha)?;
    let m = s.rf.fading.mu;
    let v = integral(1.0, &[Atom::rational(), Atom::upper(m, s.c2(), al)])?;
    Ok(v.value / (gamma_unchecked(m) * LN_2))
}

fn ln_fact(k: usize) -> f64 {
    (1..=k).map(|i| (i as f64).ln()).sum()
}

/// Relay capacity from the finite gamma series of both survival functions.
/// `asymptotic` replaces Γ(B1, u) by e^{-u}u^{B1-1} as in the original
/// derivation; the default path keeps it exact.
fn relay_capacity(s: &Scenario, asymptotic: bool) -> Result<f64> {
    match s.hops {
        Hops::ThzOnly => return capacity_thz(s),
        Hops::RfOnly => return capacity_rf(s),
        Hops::Relay => {}
    }
    let op = "capacity_relay_inid";
    let al1 = int_alpha(op, s.thz.fading.alpha)?;
    let al2 = int_alpha(op, s.rf.fading.alpha)?;
    let n1 = int_mu(op, s.thz.fading.mu)?;
    let n2 = int_mu(op, s.rf.fading.mu)?;
    let (k1, k2) = (s.thz.fading.alpha / 2.0, s.rf.fading.alpha / 2.0);
    let (c1, c2) = (s.c1(), s.c2());
    let (phi, b1, m1) = (s.thz.pointing.phi, s.thz.b1(), s.thz.fading.mu);
    let coef = s.thz.cdf_coef();
    let mut acc = Val { value: 0.0, err: 0.0 };
    let mut add = |w: f64, v: Val| {
        acc.value += w * v.value;
        acc.err += w.abs() * v.err;
    };
    for j2 in 0..n2 {
        let w2 = (j2 as f64 * c2.ln() - ln_fact(j2)).exp();
        for j1 in 0..n1 {
            let w1 = (j1 as f64 * c1.ln() - ln_fact(j1)).exp();
            let sv = 1.0 + k1 * j1 as f64 + k2 * j2 as f64;
            add(w1 * w2, integral(sv, &[Atom::rational(), Atom::exp(c1, al1), Atom::exp(c2, al2)])?);
        }
        if asymptotic {
            let sv = 1.0 + k1 * (m1 - 1.0) + k2 * j2 as f64;
            let w = -coef * c1.powf(m1 - 1.0) * w2;
            add(w, integral(sv, &[Atom::rational(), Atom::exp(c1, al1), Atom::exp(c2, al2)])?);
        } else {
            let sv = 1.0 + phi / 2.0 + k2 * j2 as f64;
            let w = -coef * c1.powf(phi / s.thz.fading.alpha) * w2;
            add(w, integral(sv, &[Atom::rational(), Atom::upper(b1, c1, al1), Atom::exp(c2, al2)])?);
        }
    }
    Ok(acc.value / LN_2)
}

/// Relay ergodic capacity in closed form (integer α and μ on both hops).
pub fn capacity_relay_inid(s: &Scenario) -> Result<f64> {
    relay_capacity(s, false)
}

/// Same series with the large-argument form of Γ(B1, ·) in the pointing term.
pub fn capacity_relay_inid_asymptotic(s: &Scenario) -> Result<f64> {
    relay_capacity(s, true)
}

/// Pieces of the identical-fading capacity bound η̄ = η̄1 + η̄2 - η̄12 - η̄21.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapacityTerms {
    pub eta1: f64,
    pub eta2: f64,
    pub eta12: f64,
    pub eta21: f64,
}

impl CapacityTerms {
    pub fn total(&self) -> f64 {
        self.eta1 + self.eta2 - self.eta12 - self.eta21
    }
}

/// E[log2 γ] for identical fading: single-hop terms in closed form, the
/// cross terms ∫log2(γ) f1 F2 and ∫log2(γ) f2 F1 by quadrature.
pub fn capacity_relay_iid(s: &Scenario) -> Result<CapacityTerms> {
    if !s.is_iid() {
        return domain("capacity_relay_iid", "needs α1 = α2 and μ1 = μ2");
    }
    int_mu("capacity_relay_iid", s.thz.fading.mu)?;
    let eta1 = capacity_lb_thz(s)?;
    let eta2 = capacity_lb_rf(s)?;
    let opts = QuadOptions { rel_tol: 1e-10, ..Default::default() };
    let scales = s.clone().with_hops(Hops::Relay).scales();
    let f12 = |g: f64| g.log2() * s.thz.pdf(g).unwrap_or(f64::NAN) * s.rf.cdf(g).unwrap_or(f64::NAN);
    let f21 = |g: f64| g.log2() * s.rf.pdf(g).unwrap_or(f64::NAN) * s.thz.cdf(g).unwrap_or(f64::NAN);
    let eta12 = integrate_positive(&f12, &scales, &opts)?.value;
    let eta21 = integrate_positive(&f21, &scales, &opts)?.value;
    Ok(CapacityTerms { eta1, eta2, eta12, eta21 })
}
