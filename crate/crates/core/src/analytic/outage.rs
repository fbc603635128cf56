use super::{mellin::gamma_safe, Hops, Scenario};
use crate::channel::e2e_cdf;
use crate::error::{domain, Result};
use crate::specfun::gamma_unchecked;

fn check(op: &'static str, g: f64) -> Result<()> {
    if !(g >= 0.0) {
        return domain(op, format!("threshold must be non-negative, got {g}"));
    }
    Ok(())
}

/// P(γ ≤ γ_th) for the end-to-end SNR.
pub fn outage_exact(s: &Scenario, gamma_th: f64) -> Result<f64> {
    check("outage_exact", gamma_th)?;
    e2e_cdf(gamma_th, s)
}

/// Sum of the leading power laws of F1 and F2 near the origin.
pub fn outage_high_snr(s: &Scenario, gamma_th: f64) -> Result<f64> {
    check("outage_high_snr", gamma_th)?;
    let (a1, m1, phi) = (s.thz.fading.alpha, s.thz.fading.mu, s.thz.pointing.phi);
    let (a2, m2) = (s.rf.fading.alpha, s.rf.fading.mu);
    let b1 = s.thz.b1();
    let c1 = s.thz.c1();
    let r1 = gamma_th / s.thz.gamma0;
    let r2 = gamma_th / s.rf.gamma0;
    // γ(μ,u) ≈ u^μ/μ and u^{φ/α}Γ(B1,u) ≈ Γ(B1)u^{φ/α} - u^μ/B1
    let t1 = c1.powf(m1) / gamma_unchecked(m1) * (1.0 / m1 - 1.0 / b1) * r1.powf(a1 * m1 / 2.0);
    let t2 = c1.powf(phi / a1) * gamma_safe(b1) / gamma_unchecked(m1) * r1.powf(phi / 2.0);
    let t3 = s.rf.b2().powf(m2) / gamma_unchecked(m2 + 1.0) * r2.powf(a2 * m2 / 2.0);
    Ok(match s.hops {
        Hops::Relay => t1 + t2 + t3,
        Hops::ThzOnly => t1 + t2,
        Hops::RfOnly => t3,
    })
}

/// Large-argument form Γ(a,x) ≈ e^{-x}x^{a-1} applied to both hops. The free
/// exponent of the THz bracket is taken as μ1.
pub fn outage_low_snr(s: &Scenario, gamma_th: f64) -> Result<f64> {
    check("outage_low_snr", gamma_th)?;
    let (a1, m1, phi) = (s.thz.fading.alpha, s.thz.fading.mu, s.thz.pointing.phi);
    let (a2, m2) = (s.rf.fading.alpha, s.rf.fading.mu);
    let u = s.thz.u(gamma_th);
    let v = s.rf.v(gamma_th);
    let coef = s.thz.cdf_coef();
    let k = m1;
    let s2 = (-v).exp() * s.rf.b2().powf(m2 - 1.0) * (gamma_th / s.rf.gamma0).powf(a2 * (m2 - 1.0) / 2.0)
        / gamma_unchecked(m2);
    let g1 = gamma_unchecked(m1);
    let up = s.thz.c1().powf(phi / a1) * (gamma_th / s.thz.gamma0).powf(phi / 2.0);
    let bracket = (g1 + up) * (-u).exp() * u.powf(k - 1.0) - (-u).exp() * g1 * u.powf(m1 - 1.0);
    // F ≈ 1 - S2 + F1 S2 with the bracket standing in for F1
    let f1 = coef * bracket;
    Ok(match s.hops {
        Hops::Relay => 1.0 - s2 + f1 * s2,
        Hops::ThzOnly => f1,
        Hops::RfOnly => 1.0 - s2,
    })
}

/// min{α1μ1/2, α2μ2/2, φ/2} (restricted to the active links).
pub fn diversity_order(s: &Scenario) -> f64 {
    let t = (s.thz.fading.alpha * s.thz.fading.mu).min(s.thz.pointing.phi) / 2.0;
    let r = s.rf.fading.alpha * s.rf.fading.mu / 2.0;
    match s.hops {
        Hops::Relay => t.min(r),
        Hops::ThzOnly => t,
        Hops::RfOnly => r,
    }
}
