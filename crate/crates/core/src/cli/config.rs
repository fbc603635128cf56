//! Scenario files in TOML. Every key is optional and overrides the defaults.
//!
//! ```text
//! thz.mu = 0.5
//! pointing.sigma_s_cm = 8
//! [sweep]
//! variable = "tx_power_dbm"
//! grid = "-10:40:5"          # or a list: [0, 10, 20]
//! metrics = ["outage", "ber"]
//! ```
//!
//! A `start:stop:step` string expands to an inclusive range.

use crate::analytic::{Hops, Modulation, Scenario};
use crate::channel::{noise_power_dbm, Atmosphere, FadingParams, PointingConfig, RfLinkBudget, ThzLinkBudget};
use crate::error::{Error, Result};
use crate::mc::McOptions;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseMode {
    /// Use `thz.noise_dbm` / `rf.noise_dbm` as given.
    Stated,
    /// PSD + 10 log10(B) + NF.
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopConfig {
    pub alpha: f64,
    pub mu: f64,
    pub omega: f64,
    pub freq_hz: f64,
    pub bandwidth_hz: f64,
    pub distance_m: f64,
    pub gain_tx_dbi: f64,
    pub gain_rx_dbi: f64,
    pub noise_dbm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    TxPowerDbm,
    GammaThDb,
    /// THz hop length; the RF hop takes the rest of `total_distance_m`.
    DistanceSplit,
    NormalizedBeamwidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Outage,
    AvgSnr,
    Aof,
    Capacity,
    Ber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Closed,
    Quadrature,
    Mc,
    /// High-SNR / large-argument variants of the closed forms.
    Asymptotic,
    /// Capacity lower bounds.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub variable: Variable,
    pub grid: Vec<f64>,
    pub metrics: Vec<Metric>,
    pub methods: Vec<Method>,
    pub hops: Vec<Hops>,
    pub gamma_th_db: f64,
    pub total_distance_m: f64,
    pub mc: McOptions,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            variable: Variable::TxPowerDbm,
            grid: vec![10.0],
            metrics: vec![Metric::Outage],
            methods: vec![Method::Closed],
            hops: vec![Hops::Relay],
            gamma_th_db: 4.0,
            total_distance_m: 90.0,
            mc: McOptions::default(),
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.grid.is_empty() {
            return bad("sweep.grid is empty".into());
        }
        if self.grid.windows(2).any(|w| !(w[1] > w[0])) {
            return bad("sweep.grid must be strictly increasing".into());
        }
        if self.metrics.is_empty() || self.methods.is_empty() || self.hops.is_empty() {
            return bad("sweep.metrics, sweep.methods and sweep.hops need at least one entry".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub thz: HopConfig,
    pub rf: HopConfig,
    pub atmosphere: Atmosphere,
    pub noise_mode: NoiseMode,
    pub noise_psd_dbm_hz: f64,
    pub noise_figure_db: f64,
    pub wz_over_r1: f64,
    pub r1_cm: f64,
    pub sigma_s_cm: f64,
    pub tx_power_dbm: f64,
    pub hops: Hops,
    pub modulation: Modulation,
    pub sweep: SweepSpec,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            thz: HopConfig {
                alpha: 2.0,
                mu: 1.0,
                omega: 1.0,
                freq_hz: 275e9,
                bandwidth_hz: 10e9,
                distance_m: 50.0,
                gain_tx_dbi: 55.0,
                gain_rx_dbi: 55.0,
                noise_dbm: -69.4,
            },
            rf: HopConfig {
                alpha: 2.0,
                mu: 1.0,
                omega: 1.0,
                freq_hz: 6e9,
                bandwidth_hz: 20e6,
                distance_m: 40.0,
                gain_tx_dbi: 25.0,
                gain_rx_dbi: 25.0,
                noise_dbm: -104.4,
            },
            atmosphere: Atmosphere::default(),
            noise_mode: NoiseMode::Stated,
            noise_psd_dbm_hz: -174.0,
            noise_figure_db: 5.0,
            wz_over_r1: 6.0,
            r1_cm: 10.0,
            sigma_s_cm: 8.0,
            tx_power_dbm: 10.0,
            hops: Hops::Relay,
            modulation: Modulation::dbpsk(),
            sweep: SweepSpec::default(),
        }
    }
}

impl Config {
    pub fn thz_noise_dbm(&self) -> f64 {
        match self.noise_mode {
            NoiseMode::Stated => self.thz.noise_dbm,
            NoiseMode::Computed => noise_power_dbm(self.noise_psd_dbm_hz, self.thz.bandwidth_hz, self.noise_figure_db),
        }
    }

    pub fn rf_noise_dbm(&self) -> f64 {
        match self.noise_mode {
            NoiseMode::Stated => self.rf.noise_dbm,
            NoiseMode::Computed => noise_power_dbm(self.noise_psd_dbm_hz, self.rf.bandwidth_hz, self.noise_figure_db),
        }
    }

    pub fn pointing(&self) -> Result<PointingConfig> {
        PointingConfig::from_normalized(self.wz_over_r1, self.r1_cm / 100.0, self.sigma_s_cm / 100.0)
    }

    /// Resolves budgets, pointing and fading into a scenario.
    pub fn scenario(&self) -> Result<Scenario> {
        let tb = ThzLinkBudget {
            freq_hz: self.thz.freq_hz,
            distance_m: self.thz.distance_m,
            gain_tx_dbi: self.thz.gain_tx_dbi,
            gain_rx_dbi: self.thz.gain_rx_dbi,
            atmosphere: self.atmosphere,
            tx_power_dbm: self.tx_power_dbm,
            noise_power_dbm: self.thz_noise_dbm(),
        };
        let rb = RfLinkBudget {
            freq_hz: self.rf.freq_hz,
            distance_m: self.rf.distance_m,
            gain_tx_dbi: self.rf.gain_tx_dbi,
            gain_rx_dbi: self.rf.gain_rx_dbi,
            tx_power_dbm: self.tx_power_dbm,
            noise_power_dbm: self.rf_noise_dbm(),
        };
        let f1 = FadingParams::new(self.thz.alpha, self.thz.mu, self.thz.omega)?;
        let f2 = FadingParams::new(self.rf.alpha, self.rf.mu, self.rf.omega)?;
        Ok(Scenario::from_budgets(f1, self.pointing()?, tb, f2, rb)?.with_hops(self.hops))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::parse(&text)
    }

    /// Parses overrides on top of the defaults and validates the result.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Self::default();
        c.apply(text)?;
        c.pointing()?;
        c.sweep.validate()?;
        Ok(c)
    }

    /// Applies TOML overrides to an existing config.
    pub fn apply(&mut self, text: &str) -> Result<()> {
        let doc: toml::Table = toml::from_str(text).map_err(|e| {
            let at = e.span().map(|r| format!("line {}: ", text[..r.start].lines().count().max(1))).unwrap_or_default();
            Error::Config(format!("{at}{}", e.message()))
        })?;
        let mut flat = Vec::new();
        flatten("", &toml::Value::Table(doc), &mut flat).map_err(Error::Config)?;
        for (k, v) in flat {
            self.set(&k, &v).map_err(Error::Config)?;
        }
        Ok(())
    }

    /// Sets one dotted key.
    pub fn set(&mut self, key: &str, v: &str) -> std::result::Result<(), String> {
        let (sec, name) = key.split_once('.').unwrap_or(("", key));
        match sec {
            "thz" | "rf" => {
                let h = if sec == "thz" { &mut self.thz } else { &mut self.rf };
                let slot = match name {
                    "alpha" => &mut h.alpha,
                    "mu" => &mut h.mu,
                    "omega" => &mut h.omega,
                    "freq_hz" => &mut h.freq_hz,
                    "bandwidth_hz" => &mut h.bandwidth_hz,
                    "distance_m" => &mut h.distance_m,
                    "gain_tx_dbi" => &mut h.gain_tx_dbi,
                    "gain_rx_dbi" => &mut h.gain_rx_dbi,
                    "noise_dbm" => &mut h.noise_dbm,
                    _ => return unknown(key),
                };
                *slot = num(key, v)?;
            }
            "atmosphere" => {
                let a = &mut self.atmosphere;
                let slot = match name {
                    "temperature_k" => &mut a.temperature_k,
                    "humidity_pct" => &mut a.humidity_pct,
                    "pressure_pa" => &mut a.pressure_pa,
                    _ => return unknown(key),
                };
                *slot = num(key, v)?;
            }
            "noise" => match name {
                "mode" => self.noise_mode = word(key, v, &[("stated", NoiseMode::Stated), ("computed", NoiseMode::Computed)])?,
                "psd_dbm_hz" => self.noise_psd_dbm_hz = num(key, v)?,
                "figure_db" => self.noise_figure_db = num(key, v)?,
                _ => return unknown(key),
            },
            "pointing" => match name {
                "wz_over_r1" => self.wz_over_r1 = num(key, v)?,
                "r1_cm" => self.r1_cm = num(key, v)?,
                "sigma_s_cm" => self.sigma_s_cm = num(key, v)?,
                _ => return unknown(key),
            },
            "link" => match name {
                "tx_power_dbm" => self.tx_power_dbm = num(key, v)?,
                "hops" => self.hops = word(key, v, HOPS)?,
                _ => return unknown(key),
            },
            "modulation" => match name {
                "p" => self.modulation.p = num(key, v)?,
                "q" => self.modulation.q = num(key, v)?,
                _ => return unknown(key),
            },
            "sweep" => {
                let s = &mut self.sweep;
                match name {
                    "variable" => s.variable = word(key, v, VARIABLES)?,
                    "grid" => s.grid = grid(key, v)?,
                    "metrics" => s.metrics = list(key, v, METRICS)?,
                    "methods" => s.methods = list(key, v, METHODS)?,
                    "hops" => s.hops = list(key, v, HOPS)?,
                    "gamma_th_db" => s.gamma_th_db = num(key, v)?,
                    "total_distance_m" => s.total_distance_m = num(key, v)?,
                    _ => return unknown(key),
                }
            }
            "mc" => {
                let m = &mut self.sweep.mc;
                match name {
                    "samples" => m.n_samples = int(key, v)? as usize,
                    "seed" => m.seed = int(key, v)?,
                    "streams" => m.n_streams = int(key, v)?.max(1) as usize,
                    _ => return unknown(key),
                }
            }
            _ => return unknown(key),
        }
        if name == "p" || name == "q" {
            Modulation::new(self.modulation.p, self.modulation.q).map_err(|e| e.to_string())?;
        }
        Ok(())
    }
}

pub(crate) const HOPS: &[(&str, Hops)] = &[("relay", Hops::Relay), ("thz_only", Hops::ThzOnly), ("rf_only", Hops::RfOnly)];
const VARIABLES: &[(&str, Variable)] = &[
    ("tx_power_dbm", Variable::TxPowerDbm),
    ("gamma_th_db", Variable::GammaThDb),
    ("distance_split", Variable::DistanceSplit),
    ("normalized_beamwidth", Variable::NormalizedBeamwidth),
];
pub(crate) const METRICS: &[(&str, Metric)] = &[
    ("outage", Metric::Outage),
    ("avg_snr", Metric::AvgSnr),
    ("aof", Metric::Aof),
    ("capacity", Metric::Capacity),
    ("ber", Metric::Ber),
];
pub(crate) const METHODS: &[(&str, Method)] = &[
    ("closed", Method::Closed),
    ("quadrature", Method::Quadrature),
    ("mc", Method::Mc),
    ("asymptotic", Method::Asymptotic),
    ("bound", Method::Bound),
];

pub(crate) fn name_of<T: PartialEq + Copy>(table: &[(&'static str, T)], x: T) -> &'static str {
    table.iter().find(|(_, v)| *v == x).map(|(n, _)| *n).unwrap_or("?")
}

/// Dotted key paths with scalar values rendered as text; arrays are joined
/// with commas.
fn flatten(prefix: &str, v: &toml::Value, out: &mut Vec<(String, String)>) -> std::result::Result<(), String> {
    let scalar = |x: &toml::Value| match x {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::Float(f) => Ok(f.to_string()),
        other => Err(format!("{prefix}: unsupported value {other}")),
    };
    match v {
        toml::Value::Table(t) => {
            for (k, x) in t {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out)?;
            }
        }
        toml::Value::Array(a) => out.push((prefix.to_string(), a.iter().map(scalar).collect::<std::result::Result<Vec<_>, _>>()?.join(","))),
        x => out.push((prefix.to_string(), scalar(x)?)),
    }
    Ok(())
}

fn unknown<T>(key: &str) -> std::result::Result<T, String> {
    Err(format!("unknown key '{key}'"))
}

fn num(key: &str, v: &str) -> std::result::Result<f64, String> {
    v.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(|| format!("{key}: expected a number, got '{v}'"))
}

fn int(key: &str, v: &str) -> std::result::Result<u64, String> {
    let x = num(key, v)?;
    if x < 0.0 || x.fract() != 0.0 || x > u64::MAX as f64 {
        return Err(format!("{key}: expected a non-negative integer, got '{v}'"));
    }
    Ok(x as u64)
}

fn word<T: Copy>(key: &str, v: &str, table: &[(&str, T)]) -> std::result::Result<T, String> {
    table.iter().find(|(n, _)| *n == v).map(|(_, t)| *t).ok_or_else(|| {
        let names: Vec<_> = table.iter().map(|(n, _)| *n).collect();
        format!("{key}: '{v}' is not one of {}", names.join(", "))
    })
}

fn list<T: Copy + PartialEq>(key: &str, v: &str, table: &[(&str, T)]) -> std::result::Result<Vec<T>, String> {
    let mut out = Vec::new();
    for w in v.split(',').map(str::trim).filter(|w| !w.is_empty()) {
        let t = word(key, w, table)?;
        if !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

fn grid(key: &str, v: &str) -> std::result::Result<Vec<f64>, String> {
    if let [a, b, st] = v.split(':').map(str::trim).collect::<Vec<_>>()[..] {
        let (a, b, st) = (num(key, a)?, num(key, b)?, num(key, st)?);
        if !(st > 0.0) || b < a {
            return Err(format!("{key}: range needs start ≤ stop and step > 0"));
        }
        let n = ((b - a) / st + 1e-9).floor() as usize;
        return Ok((0..=n).map(|i| a + i as f64 * st).collect());
    }
    v.split(',').map(str::trim).filter(|w| !w.is_empty()).map(|w| num(key, w)).collect()
}
