use super::pointing::PointingParams;
use crate::error::{domain, Result};
use crate::specfun::{
    gamma_unchecked, ln_gamma_unchecked, reg_lower_gamma, reg_upper_gamma, upper_gamma_scaled,
};
use serde::{Deserialize, Serialize};

/// α-μ small-scale fading of one hop.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FadingParams {
    pub alpha: f64,
    pub mu: f64,
    pub omega: f64,
}

impl FadingParams {
    pub fn new(alpha: f64, mu: f64, omega: f64) -> Result<Self> {
        if !(alpha > 0.0 && mu > 0.0 && omega > 0.0) || !(alpha.is_finite() && mu.is_finite() && omega.is_finite()) {
            return domain("FadingParams", format!("α, μ, Ω must be positive and finite, got ({alpha}, {mu}, {omega})"));
        }
        Ok(Self { alpha, mu, omega })
    }

    pub fn rayleigh() -> Self {
        Self { alpha: 2.0, mu: 1.0, omega: 1.0 }
    }

    /// CDF of the envelope |h_f|.
    pub fn envelope_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        reg_lower_gamma(self.mu, self.mu * (x / self.omega).powf(self.alpha)).unwrap_or(1.0)
    }

    /// Density of the envelope |h_f|.
    pub fn envelope_pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let (a, m) = (self.alpha, self.mu);
        let t = m * (x / self.omega).powf(a);
        (a.ln() + m * m.ln() + (a * m - 1.0) * x.ln() - a * m * self.omega.ln() - t - ln_gamma_unchecked(m)).exp()
    }
}

fn check_gamma(g: f64) -> Result<()> {
    if !(g >= 0.0) {
        return domain("snr distribution", format!("SNR must be non-negative, got {g}"));
    }
    Ok(())
}

/// THz hop: α-μ fading times pointing error, faded-free SNR gamma0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThzHop {
    pub fading: FadingParams,
    pub pointing: PointingParams,
    pub gamma0: f64,
}

impl ThzHop {
    pub fn new(fading: FadingParams, pointing: PointingParams, gamma0: f64) -> Result<Self> {
        if !(gamma0 > 0.0) {
            return domain("ThzHop", format!("faded-free SNR must be positive, got {gamma0}"));
        }
        Ok(Self { fading, pointing, gamma0 })
    }

    /// A1 = φ S0^{-φ} μ^{φ/α} / (Ω^φ Γ(μ)).
    pub fn a1(&self) -> f64 {
        self.ln_a1().exp()
    }
    fn ln_a1(&self) -> f64 {
        let (a, m, o) = (self.fading.alpha, self.fading.mu, self.fading.omega);
        let (s0, phi) = (self.pointing.s0, self.pointing.phi);
        phi.ln() - phi * s0.ln() + phi / a * m.ln() - phi * o.ln() - ln_gamma_unchecked(m)
    }
    /// B1 = (αμ - φ)/α.
    pub fn b1(&self) -> f64 {
        (self.fading.alpha * self.fading.mu - self.pointing.phi) / self.fading.alpha
    }
    /// C1 = μ S0^{-α} / Ω^α.
    pub fn c1(&self) -> f64 {
        let (a, m, o) = (self.fading.alpha, self.fading.mu, self.fading.omega);
        m * self.pointing.s0.powf(-a) * o.powf(-a)
    }
    /// u = C1 (γ/γ1⁰)^{α/2}, the argument of every incomplete gamma below.
    pub fn u(&self, g: f64) -> f64 {
        self.c1() * (g / self.gamma0).powf(0.5 * self.fading.alpha)
    }
    /// A1 C1^{-φ/α} / φ; equals 1/Γ(μ) by construction.
    pub fn cdf_coef(&self) -> f64 {
        (self.ln_a1() - self.pointing.phi / self.fading.alpha * self.c1().ln() - self.pointing.phi.ln()).exp()
    }

    pub fn pdf(&self, g: f64) -> Result<f64> {
        check_gamma(g)?;
        if g == 0.0 {
            // f1 ~ x^{min(φ, αμ) - 2} near the origin
            let e = self.pointing.phi.min(self.fading.alpha * self.fading.mu) - 2.0;
            return Ok(if e < 0.0 { f64::INFINITY } else if e == 0.0 { self.pdf(1e-300)? } else { 0.0 });
        }
        let u = self.u(g);
        if u.is_infinite() {
            return Ok(0.0);
        }
        let x = (g / self.gamma0).sqrt();
        let b1 = self.b1();
        let r = if u > 0.0 { upper_gamma_scaled(b1, u)? } else { f64::INFINITY };
        let ln_upper = if r.is_finite() {
            r.ln() + b1 * u.ln() - u
        } else {
            // u underflowed or u^{-B1} overflowed; leading term of Γ(B1, u) as u → 0
            let ln_u = self.c1().ln() + self.fading.alpha * x.ln();
            if b1 > 0.0 {
                ln_gamma_unchecked(b1)
            } else if b1 < 0.0 {
                b1 * ln_u - (-b1).ln()
            } else {
                (-ln_u).ln()
            }
        };
        let l = self.ln_a1() - (2.0 * self.gamma0).ln() + (self.pointing.phi - 2.0) * x.ln() + ln_upper;
        Ok(l.exp())
    }

    pub fn cdf(&self, g: f64) -> Result<f64> {
        check_gamma(g)?;
        if g == 0.0 {
            return Ok(0.0);
        }
        let u = self.u(g);
        if u.is_infinite() {
            return Ok(1.0);
        }
        let m = self.fading.mu;
        // u^{φ/α} Γ(B1, u) = R(B1, u) u^μ e^{-u}
        let lower = gamma_unchecked(m) * reg_lower_gamma(m, u)?;
        let tail = upper_gamma_scaled(self.b1(), u)? * (m * u.ln() - u).exp();
        Ok((self.cdf_coef() * (lower + tail)).min(1.0))
    }

    /// 1 - F1, without cancellation in the upper tail.
    pub fn survival(&self, g: f64) -> Result<f64> {
        let f = self.cdf(g)?;
        if f <= 0.5 {
            return Ok(1.0 - f);
        }
        let u = self.u(g);
        if u.is_infinite() {
            return Ok(0.0);
        }
        let m = self.fading.mu;
        let d = upper_gamma_scaled(m, u)? - upper_gamma_scaled(self.b1(), u)?;
        Ok((self.cdf_coef() * d * (m * u.ln() - u).exp()).max(0.0))
    }
}

/// RF hop: α-μ fading only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RfHop {
    pub fading: FadingParams,
    pub gamma0: f64,
}

impl RfHop {
    pub fn new(fading: FadingParams, gamma0: f64) -> Result<Self> {
        if !(gamma0 > 0.0) {
            return domain("RfHop", format!("faded-free SNR must be positive, got {gamma0}"));
        }
        Ok(Self { fading, gamma0 })
    }
    /// A2 = μ^μ / Ω^{αμ}.
    pub fn a2(&self) -> f64 {
        let (a, m, o) = (self.fading.alpha, self.fading.mu, self.fading.omega);
        m.powf(m) / o.powf(a * m)
    }
    /// B2 = μ / Ω^α.
    pub fn b2(&self) -> f64 {
        self.fading.mu / self.fading.omega.powf(self.fading.alpha)
    }
    pub fn v(&self, g: f64) -> f64 {
        self.b2() * (g / self.gamma0).powf(0.5 * self.fading.alpha)
    }

    pub fn pdf(&self, g: f64) -> Result<f64> {
        check_gamma(g)?;
        let (a, m) = (self.fading.alpha, self.fading.mu);
        if g == 0.0 {
            let e = a * m / 2.0 - 1.0;
            return Ok(if e < 0.0 { f64::INFINITY } else if e == 0.0 { self.pdf(1e-300)? } else { 0.0 });
        }
        let v = self.v(g);
        if v.is_infinite() {
            return Ok(0.0);
        }
        let x = (g / self.gamma0).sqrt();
        let l = self.a2().ln() + a.ln() - (2.0 * self.gamma0).ln() - ln_gamma_unchecked(m) + (a * m - 2.0) * x.ln() - v;
        Ok(l.exp())
    }

    pub fn cdf(&self, g: f64) -> Result<f64> {
        check_gamma(g)?;
        reg_lower_gamma(self.fading.mu, self.v(g))
    }

    pub fn survival(&self, g: f64) -> Result<f64> {
        check_gamma(g)?;
        reg_upper_gamma(self.fading.mu, self.v(g))
    }
}

/// Constants shared by every closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    pub a1: f64,
    pub b1: f64,
    pub c1: f64,
    pub a2: f64,
    pub b2: f64,
    pub gamma0_1: f64,
    pub gamma0_2: f64,
}

impl DerivedConstants {
    pub fn new(thz: &ThzHop, rf: &RfHop) -> Self {
        Self { a1: thz.a1(), b1: thz.b1(), c1: thz.c1(), a2: rf.a2(), b2: rf.b2(), gamma0_1: thz.gamma0, gamma0_2: rf.gamma0 }
    }
}
