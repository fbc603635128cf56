use crate::error::{domain, Result};
use crate::specfun::erf;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Beam and jitter geometry, all in metres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointingConfig {
    pub w_z: f64,
    pub r_1: f64,
    pub sigma_s: f64,
}

impl PointingConfig {
    pub fn new(w_z: f64, r_1: f64, sigma_s: f64) -> Result<Self> {
        let c = Self { w_z, r_1, sigma_s };
        c.validate()?;
        Ok(c)
    }

    /// From the normalised beam-width w_z/r_1.
    pub fn from_normalized(wz_over_r1: f64, r_1: f64, sigma_s: f64) -> Result<Self> {
        Self::new(wz_over_r1 * r_1, r_1, sigma_s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_1 > 0.0) || !(self.sigma_s > 0.0) {
            return domain("PointingConfig", "aperture radius and jitter must be positive");
        }
        let ratio = self.w_z / self.r_1;
        if !(ratio >= 6.0 - 1e-12) {
            return domain("PointingConfig", format!("w_z/r_1 = {ratio} < 6; the Gaussian-beam pointing model needs w_z/r_1 ≥ 6"));
        }
        Ok(())
    }
}

/// Derived pointing statistics: the gain is power-law on (0, s0] with exponent φ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointingParams {
    pub s0: f64,
    pub phi: f64,
    /// Equivalent beam-width at the receiver (m).
    pub w_zeq: f64,
}

impl PointingParams {
    /// Direct (s0, φ) specification; w_zeq is set to 1 m, which only fixes the
    /// length unit of the jitter used by the sampler.
    pub fn from_s0_phi(s0: f64, phi: f64) -> Result<Self> {
        if !(s0 > 0.0 && s0 <= 1.0) || !(phi > 0.0) {
            return domain("PointingParams", format!("requires 0 < s0 ≤ 1 and φ > 0, got s0={s0}, φ={phi}"));
        }
        Ok(Self { s0, phi, w_zeq: 1.0 })
    }

    /// Jitter standard deviation consistent with φ = w_zeq²/(2σ_s²).
    pub fn sigma_s(&self) -> f64 {
        self.w_zeq / (2.0 * self.phi).sqrt()
    }

    /// P(h_p ≤ h) = (h/s0)^φ on (0, s0].
    pub fn cdf(&self, h: f64) -> f64 {
        if h <= 0.0 {
            0.0
        } else if h >= self.s0 {
            1.0
        } else {
            (h / self.s0).powf(self.phi)
        }
    }
}

pub fn pointing_params(cfg: &PointingConfig) -> PointingParams {
    let v = (PI / 2.0).sqrt() * cfg.r_1 / cfg.w_z;
    let e = erf(v);
    let w_zeq2 = cfg.w_z * cfg.w_z * PI.sqrt() * e / (2.0 * v * (-v * v).exp());
    PointingParams { s0: e * e, phi: w_zeq2 / (2.0 * cfg.sigma_s * cfg.sigma_s), w_zeq: w_zeq2.sqrt() }
}
