//! Closed-form, asymptotic and quadrature-based performance metrics.

mod ber;
mod capacity;
mod mellin;
mod moments;
mod oracle;
mod outage;
mod special;

pub use ber::{ber_relay_inid, ber_relay_inid_asymptotic, ber_rf, ber_thz};
pub use capacity::{
    capacity_lb_rf, capacity_lb_thz, capacity_relay_iid, capacity_relay_inid, capacity_relay_inid_asymptotic,
    capacity_rf, capacity_thz, CapacityTerms,
};
pub use moments::{amount_of_fading, avg_snr_special, moment_iid, moment_inid, moment_terms, MomentTerms};
pub use oracle::{
    ber_by_pdf_quadrature, ber_by_quadrature, capacity_by_pdf_quadrature, capacity_by_quadrature,
    log_moment_by_quadrature, moment_by_quadrature,
};
pub use outage::{diversity_order, outage_exact, outage_high_snr, outage_low_snr};
pub use special::{metric_special_cases, SpecialCase, SpecialMetric, SpecialResult};

use crate::channel::{
    pointing_params, DerivedConstants, FadingParams, PointingConfig, RfHop, RfLinkBudget, ThzHop, ThzLinkBudget,
};
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};

/// Which links carry the signal: the relayed path or one of the direct links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hops {
    Relay,
    ThzOnly,
    RfOnly,
}

/// Conditional BER Γ(p, qγ)/(2Γ(p)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Modulation {
    pub p: f64,
    pub q: f64,
}

impl Modulation {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p > 0.0 && q > 0.0) {
            return domain("Modulation", format!("p and q must be positive, got p={p}, q={q}"));
        }
        Ok(Self { p, q })
    }
    pub fn dbpsk() -> Self {
        Self { p: 1.0, q: 1.0 }
    }
}

impl Default for Modulation {
    fn default() -> Self {
        Self::dbpsk()
    }
}

/// A fully resolved link: both hops, the budgets they came from (if any) and
/// the constants every closed form uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub thz: ThzHop,
    pub rf: RfHop,
    pub pointing_config: Option<PointingConfig>,
    pub thz_budget: Option<ThzLinkBudget>,
    pub rf_budget: Option<RfLinkBudget>,
    pub derived: DerivedConstants,
    /// α2/α1, fixed at build time.
    pub epsilon: f64,
    pub hops: Hops,
}

impl Scenario {
    pub fn new(thz: ThzHop, rf: RfHop) -> Self {
        Self {
            derived: DerivedConstants::new(&thz, &rf),
            epsilon: rf.fading.alpha / thz.fading.alpha,
            thz,
            rf,
            pointing_config: None,
            thz_budget: None,
            rf_budget: None,
            hops: Hops::Relay,
        }
    }

    pub fn from_budgets(
        thz_fading: FadingParams,
        pointing: PointingConfig,
        thz_budget: ThzLinkBudget,
        rf_fading: FadingParams,
        rf_budget: RfLinkBudget,
    ) -> Result<Self> {
        pointing.validate()?;
        let thz = ThzHop::new(thz_fading, pointing_params(&pointing), thz_budget.gamma0()?)?;
        let rf = RfHop::new(rf_fading, rf_budget.gamma0()?)?;
        let mut s = Self::new(thz, rf);
        s.pointing_config = Some(pointing);
        s.thz_budget = Some(thz_budget);
        s.rf_budget = Some(rf_budget);
        Ok(s)
    }

    pub fn with_hops(mut self, hops: Hops) -> Self {
        self.hops = hops;
        self
    }

    /// Same scenario with both faded-free SNRs replaced (linear).
    pub fn with_gamma0(&self, g1: f64, g2: f64) -> Result<Self> {
        let thz = ThzHop::new(self.thz.fading, self.thz.pointing, g1)?;
        let rf = RfHop::new(self.rf.fading, g2)?;
        let mut s = Self::new(thz, rf);
        s.hops = self.hops;
        s.pointing_config = self.pointing_config;
        Ok(s)
    }

    /// Rebuilds from the stored budgets with a new transmit power on both hops.
    pub fn with_tx_power_dbm(&self, p: f64) -> Result<Self> {
        let (Some(mut tb), Some(mut rb), Some(pc)) = (self.thz_budget, self.rf_budget, self.pointing_config) else {
            return domain("Scenario::with_tx_power_dbm", "scenario was not built from link budgets");
        };
        tb.tx_power_dbm = p;
        rb.tx_power_dbm = p;
        Ok(Self::from_budgets(self.thz.fading, pc, tb, self.rf.fading, rb)?.with_hops(self.hops))
    }

    pub fn is_iid(&self) -> bool {
        self.thz.fading.alpha == self.rf.fading.alpha && self.thz.fading.mu == self.rf.fading.mu
    }

    /// u = c1 γ^{α1/2} and v = c2 γ^{α2/2}.
    pub(crate) fn c1(&self) -> f64 {
        self.thz.c1() * self.thz.gamma0.powf(-0.5 * self.thz.fading.alpha)
    }
    pub(crate) fn c2(&self) -> f64 {
        self.rf.b2() * self.rf.gamma0.powf(-0.5 * self.rf.fading.alpha)
    }
    /// SNR values where each hop's distribution turns over.
    pub(crate) fn scales(&self) -> Vec<f64> {
        let k1 = self.thz.gamma0 * self.thz.c1().powf(-2.0 / self.thz.fading.alpha);
        let k2 = self.rf.gamma0 * self.rf.b2().powf(-2.0 / self.rf.fading.alpha);
        match self.hops {
            Hops::Relay => vec![k1, k2, self.thz.gamma0, self.rf.gamma0],
            Hops::ThzOnly => vec![k1, self.thz.gamma0],
            Hops::RfOnly => vec![k2, self.rf.gamma0],
        }
    }
}

pub(crate) fn int_mu(op: &'static str, mu: f64) -> Result<usize> {
    let r = mu.round();
    if (mu - r).abs() > 1e-12 || r < 1.0 {
        return domain(op, format!("the finite series needs integer μ, got {mu} (quadrature form applies)"));
    }
    Ok(r as usize)
}
