//! Named parameter sets.

use super::config::{Config, Method, Metric, Variable};
use crate::analytic::Hops;
use crate::error::{Error, Result};

pub const PRESETS: &[&str] = &["fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b"];

fn base(a1: f64, m1: f64, a2: f64, m2: f64, sigma_cm: f64) -> Config {
    let mut c = Config::default();
    c.thz.alpha = a1;
    c.thz.mu = m1;
    c.rf.alpha = a2;
    c.rf.mu = m2;
    c.sigma_s_cm = sigma_cm;
    c.thz.distance_m = 50.0;
    c.rf.distance_m = 40.0;
    c.sweep.variable = Variable::TxPowerDbm;
    c.sweep.grid = (0..=10).map(|i| -10.0 + 5.0 * i as f64).collect();
    c
}

fn label(parts: &[(&str, f64)]) -> String {
    parts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Labelled configurations of a named preset.
pub fn preset(name: &str) -> Result<Vec<(String, Config)>> {
    use Method::*;
    use Metric::*;
    let mut out = Vec::new();
    match name {
        "fig2a" => {
            for m1 in [0.5, 1.0, 2.0, 4.0] {
                let mut c = base(2.0, m1, 2.0, 1.0, 8.0);
                c.sweep.metrics = vec![Outage];
                c.sweep.methods = vec![Closed, Asymptotic, Mc];
                c.sweep.gamma_th_db = 4.0;
                out.push((label(&[("mu1", m1)]), c));
            }
        }
        "fig2b" => {
            for a1 in [1.0, 2.0, 3.0] {
                let mut c = base(a1, 1.0, 2.0, 4.0, 8.0);
                c.sweep.metrics = vec![Outage];
                c.sweep.methods = vec![Closed, Asymptotic, Mc];
                c.sweep.gamma_th_db = 4.0;
                out.push((label(&[("alpha1", a1)]), c));
            }
        }
        "fig3a" | "fig4a" => {
            for w in [6.0, 8.0, 10.0, 12.0] {
                let mut c = base(2.0, 4.0, 2.0, 1.0, 15.0);
                c.wz_over_r1 = w;
                if name == "fig3a" {
                    c.sweep.metrics = vec![AvgSnr];
                    c.sweep.methods = vec![Closed, Quadrature, Mc];
                } else {
                    c.sweep.metrics = vec![Capacity];
                    c.sweep.methods = vec![Closed, Quadrature, Bound, Mc];
                }
                out.push((label(&[("wz_over_r1", w)]), c));
            }
        }
        "fig3b" => {
            let mut c = base(2.0, 4.0, 2.0, 1.0, 15.0);
            c.sweep.metrics = vec![AvgSnr, Aof];
            c.sweep.methods = vec![Closed, Quadrature, Mc];
            c.sweep.hops = vec![Hops::Relay, Hops::ThzOnly, Hops::RfOnly];
            out.push((label(&[("wz_over_r1", 6.0)]), c));
        }
        "fig4b" => {
            for a1 in [1.0, 2.0, 3.0] {
                let mut c = base(a1, 1.0, 2.0, 4.0, 15.0);
                c.sweep.metrics = vec![AvgSnr, Capacity];
                c.sweep.methods = vec![Closed, Quadrature, Mc];
                c.sweep.hops = vec![Hops::Relay, Hops::ThzOnly, Hops::RfOnly];
                out.push((label(&[("alpha1", a1)]), c));
            }
        }
        "fig5a" => {
            for w in [6.0, 12.0] {
                for a1 in [1.0, 2.0, 2.5] {
                    let mut c = base(a1, 1.0, 2.0, 4.0, 15.0);
                    c.wz_over_r1 = w;
                    c.sweep.metrics = vec![Ber];
                    c.sweep.methods = vec![Closed, Quadrature, Mc];
                    out.push((label(&[("alpha1", a1), ("wz_over_r1", w)]), c));
                }
            }
        }
        "fig5b" => {
            let mut c = base(2.0, 1.0, 2.0, 4.0, 15.0);
            c.tx_power_dbm = 10.0;
            c.sweep.variable = Variable::DistanceSplit;
            c.sweep.total_distance_m = 80.0;
            c.sweep.grid = (1..=7).map(|i| 10.0 * i as f64).collect();
            c.sweep.metrics = vec![Ber];
            c.sweep.methods = vec![Closed, Quadrature, Mc];
            out.push((label(&[("total_distance_m", 80.0)]), c));
        }
        _ => {
            return Err(Error::Config(format!("unknown preset '{name}', expected one of {}", PRESETS.join(", "))))
        }
    }
    Ok(out)
}
