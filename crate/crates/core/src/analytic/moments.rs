use super::mellin::{gamma_safe, int_alpha, integral, Atom};
use super::special::{check_case, SpecialCase};
use super::{Hops, Scenario};
use crate::error::{domain, Result};
use crate::specfun::{gamma_unchecked, gauss_2f1};
use serde::Serialize;

/// The four pieces of the n-th moment: γ̄ = γ̄1 + γ̄2 - γ̄12 - γ̄21.
///
/// `total` is evaluated as ∫γⁿ f1 (1-F2) + ∫γⁿ f2 (1-F1); summing the four
/// pieces instead loses digits whenever one hop is much stronger.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentTerms {
    pub g1: f64,
    pub g2: f64,
    pub g12: f64,
    pub g21: f64,
    pub total: f64,
    pub abs_error: f64,
}

fn check_n(op: &'static str, n: f64) -> Result<()> {
    if !(n >= 0.0) || !n.is_finite() {
        return domain(op, format!("moment order must be non-negative, got {n}"));
    }
    Ok(())
}

/// Single-hop moments.
fn g1_g2(s: &Scenario, n: f64) -> (f64, f64) {
    let (a1, phi) = (s.thz.fading.alpha, s.thz.pointing.phi);
    let (a2, m2) = (s.rf.fading.alpha, s.rf.fading.mu);
    let b = (phi + 2.0 * n) / a1;
    let g1 = (s.thz.a1().ln() - b * s.thz.c1().ln() + n * s.thz.gamma0.ln() + gamma_safe(s.thz.b1() + b).ln()).exp()
        / (2.0 * n + phi);
    let g2 = (-2.0 * n / a2 * s.rf.b2().ln() + n * s.rf.gamma0.ln() + gamma_unchecked(2.0 * n / a2 + m2).ln()).exp()
        / gamma_unchecked(m2);
    (g1, g2)
}

/// Closed-form terms of the n-th end-to-end moment for integer α1, α2.
pub fn moment_terms(s: &Scenario, n: f64) -> Result<MomentTerms> {
    check_n("moment_inid", n)?;
    let (g1, g2) = g1_g2(s, n);
    if s.hops != Hops::Relay {
        let (g1, g2) = if s.hops == Hops::ThzOnly { (g1, 0.0) } else { (0.0, g2) };
        let total = g1 + g2;
        return Ok(MomentTerms { g1, g2, g12: 0.0, g21: 0.0, total, abs_error: 1e-14 * total });
    }
    let al1 = int_alpha("moment_inid", s.thz.fading.alpha)?;
    let al2 = int_alpha("moment_inid", s.rf.fading.alpha)?;
    let (m1, phi, b1) = (s.thz.fading.mu, s.thz.pointing.phi, s.thz.b1());
    let (a2, m2) = (s.rf.fading.alpha, s.rf.fading.mu);
    let (c1, c2) = (s.c1(), s.c2());
    let cb = c1.powf(phi / s.thz.fading.alpha);
    let k1 = (s.thz.a1().ln() - (phi / 2.0) * s.thz.gamma0.ln()).exp() / (2.0 * gamma_unchecked(m2));
    let k2 = s.rf.a2() * a2 / (2.0 * gamma_unchecked(m2)) * s.rf.gamma0.powf(-a2 * m2 / 2.0) * s.thz.cdf_coef();
    let s1 = n + phi / 2.0;
    let s2 = n + a2 * m2 / 2.0;

    // ∫ γⁿ f1 F2 and ∫ γⁿ f2 F1
    let i12 = integral(s1, &[Atom::upper(b1, c1, al1), Atom::lower(m2, c2, al2)])?;
    let ia = integral(s2, &[Atom::exp(c2, al2), Atom::lower(m1, c1, al1)])?;
    let ib = integral(s2 + phi / 2.0, &[Atom::exp(c2, al2), Atom::upper(b1, c1, al1)])?;
    let g12 = k1 * i12.value;
    let g21 = k2 * (ia.value + cb * ib.value);

    // ∫ γⁿ f1 (1-F2) and ∫ γⁿ f2 (1-F1)
    let j12 = integral(s1, &[Atom::upper(b1, c1, al1), Atom::upper(m2, c2, al2)])?;
    let ja = integral(s2, &[Atom::exp(c2, al2), Atom::upper(m1, c1, al1)])?;
    let total = k1 * j12.value + k2 * (ja.value - cb * ib.value);
    let abs_error = k1 * j12.err + k2 * (ja.err + cb * ib.err) + 1e-14 * total.abs();
    Ok(MomentTerms { g1, g2, g12, g21, total, abs_error })
}

/// n-th moment of the end-to-end SNR from the Meijer-G closed form.
pub fn moment_inid(s: &Scenario, n: f64) -> Result<f64> {
    Ok(moment_terms(s, n)?.total)
}

/// n-th moment for identical fading on both hops, through Gauss
/// hypergeometric functions only.
pub fn moment_iid(s: &Scenario, n: f64) -> Result<f64> {
    check_n("moment_iid", n)?;
    if !s.is_iid() {
        return domain("moment_iid", "needs α1 = α2 and μ1 = μ2");
    }
    let (g1, g2) = g1_g2(s, n);
    match s.hops {
        Hops::ThzOnly => return Ok(g1),
        Hops::RfOnly => return Ok(g2),
        Hops::Relay => {}
    }
    let (a, mu, phi) = (s.thz.fading.alpha, s.thz.fading.mu, s.thz.pointing.phi);
    let (big_b1, big_c1, big_a1) = (s.thz.b1(), s.thz.c1(), s.thz.a1());
    let (big_a2, big_b2) = (s.rf.a2(), s.rf.b2());
    let (gam1, gam2) = (s.thz.gamma0, s.rf.gamma0);
    let gm = gamma_unchecked(mu);

    // ∫ γⁿ f1 (1-F2)
    let b = (phi + 2.0 * n) / a;
    let d = big_b2 * (gam1 / gam2).powf(a / 2.0);
    let p = b + mu + big_b1;
    let k = (big_b1 * big_c1.ln() + gamma_unchecked(p).ln() - p * (big_c1 + d).ln()).exp();
    let j = (d.powf(mu) / b)
        * (k / (b + mu) * gauss_2f1(1.0, p, b + mu + 1.0, d / (big_c1 + d))?
            + k / (big_b1 + b) * gauss_2f1(1.0, p, big_b1 + b + 1.0, big_c1 / (big_c1 + d))?);
    let t1 = big_a1 * gam1.powf(n) / (a * gm) * j;

    // ∫ γⁿ f2 (1-F1)
    let cp = big_c1 * (gam2 / gam1).powf(a / 2.0);
    let w = mu + 2.0 * n / a;
    let b0 = phi / a;
    let q = w + mu;
    let z = big_b2 / (cp + big_b2);
    let h = (mu * cp.ln() + gamma_unchecked(q).ln() - q * (cp + big_b2).ln()).exp();
    let t2 = big_a2 * gam2.powf(n) / (gm * gm)
        * h
        * (gauss_2f1(1.0, q, w + 1.0, z)? / w - gauss_2f1(1.0, q, w + b0 + 1.0, z)? / (w + b0));
    Ok(t1 + t2)
}

/// γ̄⁽²⁾/(γ̄⁽¹⁾)² - 1 from the closed-form moments.
pub fn amount_of_fading(s: &Scenario) -> Result<f64> {
    let m1 = moment_inid(s, 1.0)?;
    let m2 = moment_inid(s, 2.0)?;
    Ok(m2 / (m1 * m1) - 1.0)
}

/// Average SNR for the two simplified fading patterns.
pub fn avg_snr_special(s: &Scenario, case: SpecialCase) -> Result<f64> {
    check_case(s, case)?;
    let (g1, g2, s0, phi) = (s.thz.gamma0, s.rf.gamma0, s.thz.pointing.s0, s.thz.pointing.phi);
    Ok(avg_snr_formula(case, g1, g2, s0, phi))
}

pub(crate) fn avg_snr_formula(case: SpecialCase, g1: f64, g2: f64, s0: f64, phi: f64) -> f64 {
    match case {
        SpecialCase::NakagamiRayleigh => {
            let k = 1.0 + 2.0 * s0.powi(-2);
            g1 + 2.0 * g2 - 2.0 * s0.powi(-2) * g1 * (g1 - 1.0 / ((g1 / g2).sqrt() + 2.0 * s0.powi(-2)).powi(2))
                - g2 * ((2.0 * k.powi(4) + 6.0 - k * k) / k.powi(4))
        }
        SpecialCase::WeibullRayleigh => g2 - s0.powf(-phi) * g2 / phi,
    }
}
