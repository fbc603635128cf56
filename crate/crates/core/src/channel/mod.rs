//! System model: path gains, pointing statistics, α-μ fading and the per-hop
//! SNR distributions, plus the decode-and-forward end-to-end combination.

mod budget;
mod hops;
mod pointing;

pub use budget::{
    absorption_coefficient, absorption_constants, buck_saturation_pressure, noise_power_dbm, rf_path_gain_db,
    thz_path_gain, Atmosphere, RfLinkBudget, ThzLinkBudget,
};
pub use hops::{DerivedConstants, FadingParams, RfHop, ThzHop};
pub use pointing::{pointing_params, PointingConfig, PointingParams};

use crate::analytic::{Hops, Scenario};
use crate::error::Result;

pub fn snr_pdf_thz(g: f64, hop: &ThzHop) -> Result<f64> {
    hop.pdf(g)
}
pub fn snr_cdf_thz(g: f64, hop: &ThzHop) -> Result<f64> {
    hop.cdf(g)
}
pub fn snr_pdf_rf(g: f64, hop: &RfHop) -> Result<f64> {
    hop.pdf(g)
}
pub fn snr_cdf_rf(g: f64, hop: &RfHop) -> Result<f64> {
    hop.cdf(g)
}

/// P(min(γ1, γ2) ≤ γ) = F1 + F2 - F1 F2, or 1 - S1 S2 past the median.
pub fn e2e_cdf(g: f64, s: &Scenario) -> Result<f64> {
    match s.hops {
        Hops::ThzOnly => s.thz.cdf(g),
        Hops::RfOnly => s.rf.cdf(g),
        Hops::Relay => {
            let (f1, f2) = (s.thz.cdf(g)?, s.rf.cdf(g)?);
            if f1.max(f2) > 0.5 {
                return Ok(1.0 - s.thz.survival(g)? * s.rf.survival(g)?);
            }
            Ok(f1 + f2 - f1 * f2)
        }
    }
}

/// 1 - F, formed as a product of hop survival functions.
pub fn e2e_survival(g: f64, s: &Scenario) -> Result<f64> {
    match s.hops {
        Hops::ThzOnly => s.thz.survival(g),
        Hops::RfOnly => s.rf.survival(g),
        Hops::Relay => Ok(s.thz.survival(g)? * s.rf.survival(g)?),
    }
}

/// f = f1 + f2 - f1 F2 - F1 f2 = f1 S2 + f2 S1.
pub fn e2e_pdf(g: f64, s: &Scenario) -> Result<f64> {
    match s.hops {
        Hops::ThzOnly => s.thz.pdf(g),
        Hops::RfOnly => s.rf.pdf(g),
        Hops::Relay => {
            let a = s.thz.pdf(g)?;
            let b = s.rf.pdf(g)?;
            let sa = if a == 0.0 { 0.0 } else { a * s.rf.survival(g)? };
            let sb = if b == 0.0 { 0.0 } else { b * s.thz.survival(g)? };
            Ok(sa + sb)
        }
    }
}
