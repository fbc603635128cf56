//! Simplified formulas for two fading patterns, reported next to the matching
//! quadrature value. They hold only in part of the parameter space, so each
//! result carries a validity flag instead of being trusted.

use super::moments::avg_snr_formula;
use super::oracle::{ber_by_quadrature, capacity_by_quadrature, moment_by_quadrature};
use super::{Modulation, Scenario};
use crate::error::{domain, Result};
use crate::specfun::upper_gamma_scaled;
use serde::{Deserialize, Serialize};
use std::f64::consts::LN_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialCase {
    /// THz α=2, μ=2, φ=2; RF Rayleigh.
    NakagamiRayleigh,
    /// THz μ=1, φ=2 with α1 large; RF Rayleigh.
    WeibullRayleigh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialMetric {
    AvgSnr,
    Capacity,
    Ber,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialResult {
    pub value: f64,
    pub oracle: f64,
    /// value - oracle
    pub discrepancy: f64,
    /// false when the formula leaves the metric's admissible range
    pub valid: bool,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-9
}

pub(crate) fn check_case(s: &Scenario, case: SpecialCase) -> Result<()> {
    let (a1, m1, phi) = (s.thz.fading.alpha, s.thz.fading.mu, s.thz.pointing.phi);
    let (a2, m2) = (s.rf.fading.alpha, s.rf.fading.mu);
    let rf = close(a2, 2.0) && close(m2, 1.0);
    let ok = match case {
        SpecialCase::NakagamiRayleigh => rf && close(a1, 2.0) && close(m1, 2.0) && close(phi, 2.0),
        SpecialCase::WeibullRayleigh => rf && close(m1, 1.0) && close(phi, 2.0),
    };
    if !ok {
        return domain(
            "special case",
            format!("{case:?} does not match (α1, μ1, φ, α2, μ2) = ({a1}, {m1}, {phi}, {a2}, {m2})"),
        );
    }
    Ok(())
}

impl SpecialCase {
    /// The displayed formula as a function of the faded-free SNRs and pointing.
    pub fn formula(self, metric: SpecialMetric, g1: f64, g2: f64, s0: f64, phi: f64) -> f64 {
        // e^x Γ(0, x)
        let e1 = |x: f64| upper_gamma_scaled(0.0, x).unwrap_or(f64::NAN);
        match (metric, self) {
            (SpecialMetric::AvgSnr, c) => avg_snr_formula(c, g1, g2, s0, phi),
            (SpecialMetric::Capacity, SpecialCase::NakagamiRayleigh) => {
                let x = g2 + 2.0 * s0.powi(-2) * g1;
                -(1.0 - x * e1(x)) / (LN_2 * x) + e1(x) / LN_2
            }
            (SpecialMetric::Capacity, SpecialCase::WeibullRayleigh) => e1(g2) / LN_2,
            (SpecialMetric::Ber, SpecialCase::NakagamiRayleigh) => {
                1.0 - 1.0 / (1.0 + g2) + 1.0 / (2.0 * (1.0 + 2.0 * s0.powi(-2) * g1 + g2))
                    - (1.0 + 3.0 * g2) / (1.0 + 2.0 * g2).powi(2)
            }
            (SpecialMetric::Ber, SpecialCase::WeibullRayleigh) => (g2 + 2.0 * s0.powf(-phi)) / (1.0 + g2),
        }
    }
}

/// Evaluates the simplified formula and the quadrature value of the same metric.
pub fn metric_special_cases(s: &Scenario, metric: SpecialMetric, case: SpecialCase) -> Result<SpecialResult> {
    check_case(s, case)?;
    let value = case.formula(metric, s.thz.gamma0, s.rf.gamma0, s.thz.pointing.s0, s.thz.pointing.phi);
    let oracle = match metric {
        SpecialMetric::AvgSnr => moment_by_quadrature(s, 1.0)?,
        SpecialMetric::Capacity => capacity_by_quadrature(s)?,
        SpecialMetric::Ber => ber_by_quadrature(s, &Modulation::dbpsk())?,
    };
    let valid = value.is_finite()
        && match metric {
            SpecialMetric::Ber => (0.0..=0.5).contains(&value),
            _ => value >= 0.0,
        };
    Ok(SpecialResult { value, oracle, discrepancy: value - oracle, valid })
}
