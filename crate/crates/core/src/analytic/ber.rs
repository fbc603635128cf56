use super::mellin::{int_alpha, integral, Atom, Val};
use super::{int_mu, Hops, Modulation, Scenario};
use crate::error::Result;
use crate::specfun::gamma_unchecked;

fn weight(m: &Modulation) -> f64 {
    (m.p * m.q.ln()).exp() / (2.0 * gamma_unchecked(m.p))
}

/// Average BER of the direct THz link.
pub fn ber_thz(s: &Scenario, m: &Modulation) -> Result<f64> {
    let al = int_alpha("ber_thz", s.thz.fading.alpha)?;
    let (mu, b1, phi) = (s.thz.fading.mu, s.thz.b1(), s.thz.pointing.phi);
    let c1 = s.c1();
    let a = integral(m.p, &[Atom::exp(m.q, 2), Atom::lower(mu, c1, al)])?;
    let b = integral(m.p + phi / 2.0, &[Atom::exp(m.q, 2), Atom::upper(b1, c1, al)])?;
    let v = weight(m) * s.thz.cdf_coef() * (a.value + c1.powf(phi / s.thz.fading.alpha) * b.value);
    Ok(v)
}

/// Average BER of the direct RF link.
pub fn ber_rf(s: &Scenario, m: &Modulation) -> Result<f64> {
    let al = int_alpha("ber_rf", s.rf.fading.alpha)?;
    let mu = s.rf.fading.mu;
    let a = integral(m.p, &[Atom::exp(m.q, 2), Atom::lower(mu, s.c2(), al)])?;
    Ok(weight(m) * a.value / gamma_unchecked(mu))
}

fn ln_fact(k: usize) -> f64 {
    (1..=k).map(|i| (i as f64).ln()).sum()
}

/// P̄e = P̄e1 + q^p/(2Γ(p)) ∫ γ^{p-1} e^{-qγ} F2 S1 dγ, with S1 expanded in its
/// finite gamma series.
fn relay_ber(s: &Scenario, m: &Modulation, asymptotic: bool) -> Result<f64> {
    match s.hops {
        Hops::ThzOnly => return ber_thz(s, m),
        Hops::RfOnly => return ber_rf(s, m),
        Hops::Relay => {}
    }
    let op = "ber_relay_inid";
    let al1 = int_alpha(op, s.thz.fading.alpha)?;
    let al2 = int_alpha(op, s.rf.fading.alpha)?;
    let n1 = int_mu(op, s.thz.fading.mu)?;
    int_mu(op, s.rf.fading.mu)?;
    let pe1 = ber_thz(s, m)?;
    let (c1, c2) = (s.c1(), s.c2());
    let (mu1, mu2, phi, b1) = (s.thz.fading.mu, s.rf.fading.mu, s.thz.pointing.phi, s.thz.b1());
    let k1 = s.thz.fading.alpha / 2.0;
    let coef = s.thz.cdf_coef();
    let f2 = Atom::lower(mu2, c2, al2);
    let q = Atom::exp(m.q, 2);
    let mut acc = Val { value: 0.0, err: 0.0 };
    for j in 0..n1 {
        let w = (j as f64 * c1.ln() - ln_fact(j)).exp();
        let v = integral(m.p + k1 * j as f64, &[q, Atom::exp(c1, al1), f2])?;
        acc.value += w * v.value;
        acc.err += w * v.err;
    }
    let v = if asymptotic {
        integral(m.p + k1 * (mu1 - 1.0), &[q, Atom::exp(c1, al1), f2])?.value * c1.powf(mu1 - 1.0)
    } else {
        integral(m.p + phi / 2.0, &[q, Atom::upper(b1, c1, al1), f2])?.value * c1.powf(phi / s.thz.fading.alpha)
    };
    acc.value -= coef * v;
    let cross = weight(m) * acc.value / gamma_unchecked(mu2);
    Ok(pe1 + cross)
}

/// Relay BER in closed form (integer α and μ on both hops).
pub fn ber_relay_inid(s: &Scenario, m: &Modulation) -> Result<f64> {
    relay_ber(s, m, false)
}

/// Same series with the large-argument form of Γ(B1, ·) in the pointing term.
pub fn ber_relay_inid_asymptotic(s: &Scenario, m: &Modulation) -> Result<f64> {
    relay_ber(s, m, true)
}
