use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const LIGHT_SPEED: f64 = 299_792_458.0;

// Molecular absorption fit for the 275-400 GHz window.
const Q: [f64; 10] = [0.2205, 0.1303, 0.0294, 0.4093, 0.0925, 2.014, 0.1702, 0.0303, 0.537, 0.0956];
const C: [f64; 4] = [5.54e-37, -3.94e-25, 9.06e-14, -6.36e-3];
const P1: f64 = 10.835;
const P2: f64 = 12.664;

/// Absorption-fit constants (q1..q10, c1..c4, p1, p2 in cm^-1).
pub fn absorption_constants() -> ([f64; 10], [f64; 4], f64, f64) {
    (Q, C, P1, P2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atmosphere {
    pub temperature_k: f64,
    /// Relative humidity in percent.
    pub humidity_pct: f64,
    pub pressure_pa: f64,
}

impl Default for Atmosphere {
    fn default() -> Self {
        Self { temperature_k: 296.0, humidity_pct: 50.0, pressure_pa: 101_325.0 }
    }
}

/// Saturated water-vapour pressure (Buck), in Pa.
pub fn buck_saturation_pressure(temperature_k: f64, pressure_pa: f64) -> Result<f64> {
    if !(240.0..=330.0).contains(&temperature_k) {
        return domain("buck_saturation_pressure", format!("temperature {temperature_k} K outside [240, 330] K"));
    }
    if !(pressure_pa > 0.0) {
        return domain("buck_saturation_pressure", format!("pressure must be positive, got {pressure_pa}"));
    }
    let tc = temperature_k - 273.15;
    Ok(611.21 * ((18.678 - tc / 234.5) * (tc / (257.14 + tc))).exp())
}

/// Molecular absorption coefficient k(f, T, ψ, p) in 1/m.
pub fn absorption_coefficient(freq_hz: f64, temperature_k: f64, humidity_pct: f64, pressure_pa: f64) -> Result<f64> {
    if !(0.0..=100.0).contains(&humidity_pct) {
        return domain("absorption_coefficient", format!("humidity {humidity_pct}% outside [0, 100]"));
    }
    if !(freq_hz > 0.0) {
        return domain("absorption_coefficient", format!("frequency must be positive, got {freq_hz}"));
    }
    let pw = buck_saturation_pressure(temperature_k, pressure_pa)?;
    let v = humidity_pct / 100.0 * pw / pressure_pa;
    let nu = freq_hz / (100.0 * LIGHT_SPEED);
    let line1 = Q[0] * v * (Q[1] * v + Q[2]) / ((Q[3] * v + Q[4]).powi(2) + (nu - P1).powi(2));
    let line2 = Q[5] * v * (Q[6] * v + Q[7]) / ((Q[8] * v + Q[9]).powi(2) + (nu - P2).powi(2));
    let f = freq_hz;
    let poly = C[0] * f * f * f + C[1] * f * f + C[2] * f + C[3];
    Ok(line1 + line2 + poly)
}

/// Noise power from PSD, bandwidth and noise figure.
pub fn noise_power_dbm(psd_dbm_per_hz: f64, bandwidth_hz: f64, noise_figure_db: f64) -> f64 {
    psd_dbm_per_hz + 10.0 * bandwidth_hz.log10() + noise_figure_db
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThzLinkBudget {
    pub freq_hz: f64,
    pub distance_m: f64,
    pub gain_tx_dbi: f64,
    pub gain_rx_dbi: f64,
    pub atmosphere: Atmosphere,
    pub tx_power_dbm: f64,
    pub noise_power_dbm: f64,
}

impl Default for ThzLinkBudget {
    fn default() -> Self {
        Self {
            freq_hz: 275e9,
            distance_m: 50.0,
            gain_tx_dbi: 55.0,
            gain_rx_dbi: 55.0,
            atmosphere: Atmosphere::default(),
            tx_power_dbm: 10.0,
            noise_power_dbm: -69.4,
        }
    }
}

impl ThzLinkBudget {
    pub fn validate(&self) -> Result<()> {
        if !(self.distance_m > 0.0) {
            return domain("ThzLinkBudget", format!("distance must be positive, got {}", self.distance_m));
        }
        if !(0.0..=100.0).contains(&self.atmosphere.humidity_pct) {
            return domain("ThzLinkBudget", "humidity outside [0, 100] %");
        }
        Ok(())
    }

    /// Faded-free SNR (linear).
    pub fn gamma0(&self) -> Result<f64> {
        let h = thz_path_gain(self)?;
        Ok(10f64.powf((self.tx_power_dbm - self.noise_power_dbm) / 10.0) * h * h)
    }
}

/// Deterministic THz amplitude gain h_l (free-space spreading plus absorption).
pub fn thz_path_gain(b: &ThzLinkBudget) -> Result<f64> {
    b.validate()?;
    let a = b.atmosphere;
    let k = absorption_coefficient(b.freq_hz, a.temperature_k, a.humidity_pct, a.pressure_pa)?;
    let g = 10f64.powf((b.gain_tx_dbi + b.gain_rx_dbi) / 20.0);
    Ok(LIGHT_SPEED * g / (4.0 * PI * b.freq_hz * b.distance_m) * (-0.5 * k * b.distance_m).exp())
}

/// RF path gain in dB from the 3GPP indoor-hotspot style fit.
pub fn rf_path_gain_db(distance_m: f64, freq_hz: f64) -> Result<f64> {
    if !(distance_m > 0.0) || !(freq_hz > 0.0) {
        return domain("rf_path_gain_db", format!("requires d > 0 and f > 0, got d={distance_m}, f={freq_hz}"));
    }
    Ok(-(32.4 + 17.3 * distance_m.log10() + 20.0 * (freq_hz * 1e-9).log10()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RfLinkBudget {
    pub freq_hz: f64,
    pub distance_m: f64,
    pub gain_tx_dbi: f64,
    pub gain_rx_dbi: f64,
    pub tx_power_dbm: f64,
    pub noise_power_dbm: f64,
}

impl Default for RfLinkBudget {
    fn default() -> Self {
        Self {
            freq_hz: 6e9,
            distance_m: 50.0,
            gain_tx_dbi: 25.0,
            gain_rx_dbi: 25.0,
            tx_power_dbm: 10.0,
            noise_power_dbm: -104.4,
        }
    }
}

impl RfLinkBudget {
    pub fn gamma0(&self) -> Result<f64> {
        let pl = rf_path_gain_db(self.distance_m, self.freq_hz)?;
        Ok(10f64.powf((self.tx_power_dbm + self.gain_tx_dbi + self.gain_rx_dbi + pl - self.noise_power_dbm) / 10.0))
    }
}
