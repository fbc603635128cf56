use super::config::{name_of, Config, Method, Metric, Variable, HOPS, METHODS, METRICS};
use super::table::{Cell, Table};
use crate::analytic::*;
use crate::channel::e2e_pdf;
use crate::error::{eval_err, Result};
use crate::mc::{mc_amount_of_fading, mc_ber, mc_capacity, mc_mean_snr, mc_outage, McOptions};
use crate::quadrature::{integrate, QuadOptions};
use rayon::prelude::*;

/// ∫_0^γth f(γ) dγ with γ = γth t⁸, which flattens the power-law behaviour of
/// the density at the origin.
pub fn outage_by_quadrature(s: &Scenario, gamma_th: f64) -> Result<f64> {
    if gamma_th == 0.0 {
        return Ok(0.0);
    }
    let f = |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        let g = gamma_th * t.powi(8);
        8.0 * gamma_th * t.powi(7) * e2e_pdf(g, s).unwrap_or(f64::NAN)
    };
    let breaks: Vec<f64> = s.scales().iter().map(|x| (x / gamma_th).powf(0.125)).filter(|t| *t < 1.0).collect();
    let v = integrate(&f, 0.0, 1.0, &breaks, &QuadOptions { max_intervals: 8000, ..Default::default() })?.value;
    if !v.is_finite() {
        return eval_err("outage_by_quadrature", "non-finite integral");
    }
    Ok(v.min(1.0))
}

/// Value and optional 95% interval of one metric by one method.
pub fn evaluate(
    s: &Scenario,
    metric: Metric,
    method: Method,
    gamma_th: f64,
    m: &Modulation,
    mc: &McOptions,
) -> Result<(f64, Option<(f64, f64)>)> {
    let plain = |v: Result<f64>| v.map(|x| (x, None));
    let est = |e: Result<crate::mc::McEstimate>| e.map(|e| (e.mean, Some((e.ci_low, e.ci_high))));
    let unsupported = || eval_err("sweep", format!("{} has no {} form", name_of(METRICS, metric), name_of(METHODS, method)));
    let r = match (metric, method) {
        (Metric::Outage, Method::Closed) => plain(outage_exact(s, gamma_th)),
        (Metric::Outage, Method::Quadrature) => plain(outage_by_quadrature(s, gamma_th)),
        (Metric::Outage, Method::Asymptotic) => plain(outage_high_snr(s, gamma_th)),
        (Metric::Outage, Method::Mc) => est(mc_outage(s, gamma_th, mc)),
        (Metric::AvgSnr, Method::Closed) => plain(moment_inid(s, 1.0)),
        (Metric::AvgSnr, Method::Quadrature) => plain(moment_by_quadrature(s, 1.0)),
        (Metric::AvgSnr, Method::Mc) => est(mc_mean_snr(s, mc)),
        (Metric::Aof, Method::Closed) => plain(amount_of_fading(s)),
        (Metric::Aof, Method::Quadrature) => {
            plain(moment_by_quadrature(s, 1.0).and_then(|m1| Ok(moment_by_quadrature(s, 2.0)? / (m1 * m1) - 1.0)))
        }
        (Metric::Aof, Method::Mc) => est(mc_amount_of_fading(s, mc)),
        (Metric::Capacity, Method::Closed) => plain(capacity_relay_inid(s)),
        (Metric::Capacity, Method::Quadrature) => plain(capacity_by_quadrature(s)),
        (Metric::Capacity, Method::Asymptotic) => plain(capacity_relay_inid_asymptotic(s)),
        (Metric::Capacity, Method::Bound) => plain(match s.hops {
            Hops::ThzOnly => capacity_lb_thz(s),
            Hops::RfOnly => capacity_lb_rf(s),
            Hops::Relay => capacity_relay_iid(s).map(|t| t.total()),
        }),
        (Metric::Capacity, Method::Mc) => est(mc_capacity(s, mc)),
        (Metric::Ber, Method::Closed) => plain(ber_relay_inid(s, m)),
        (Metric::Ber, Method::Quadrature) => plain(ber_by_quadrature(s, m)),
        (Metric::Ber, Method::Asymptotic) => plain(ber_relay_inid_asymptotic(s, m)),
        (Metric::Ber, Method::Mc) => est(mc_ber(s, m, mc)),
        _ => unsupported(),
    }?;
    if !r.0.is_finite() {
        return eval_err("sweep", "non-finite result");
    }
    Ok(r)
}

/// Config for one grid point.
pub fn at_point(c: &Config, x: f64) -> Config {
    let mut c = c.clone();
    match c.sweep.variable {
        Variable::TxPowerDbm => c.tx_power_dbm = x,
        Variable::GammaThDb => c.sweep.gamma_th_db = x,
        Variable::DistanceSplit => {
            c.thz.distance_m = x;
            c.rf.distance_m = c.sweep.total_distance_m - x;
        }
        Variable::NormalizedBeamwidth => c.wz_over_r1 = x,
    }
    c
}

/// Scenario for one link choice. The direct links span the whole
/// source-destination distance, d_THz + d_RF.
pub fn scenario_for(c: &Config, hops: Hops) -> Result<Scenario> {
    let mut c = c.clone();
    let total = c.thz.distance_m + c.rf.distance_m;
    match hops {
        Hops::Relay => {}
        Hops::ThzOnly => c.thz.distance_m = total,
        Hops::RfOnly => c.rf.distance_m = total,
    }
    c.hops = hops;
    c.scenario()
}

fn variable_name(v: Variable) -> &'static str {
    match v {
        Variable::TxPowerDbm => "tx_power_dbm",
        Variable::GammaThDb => "gamma_th_db",
        Variable::DistanceSplit => "thz_distance_m",
        Variable::NormalizedBeamwidth => "wz_over_r1",
    }
}

struct Col {
    metric: Metric,
    method: Method,
    hops: Hops,
    name: String,
}

fn layout(c: &Config) -> Vec<Col> {
    let sw = &c.sweep;
    let mut cols = Vec::new();
    for &hops in &sw.hops {
        for &metric in &sw.metrics {
            for &method in &sw.methods {
                let mut name = format!("{}_{}", name_of(METRICS, metric), name_of(METHODS, method));
                if sw.hops.len() > 1 {
                    name = format!("{name}_{}", name_of(HOPS, hops));
                }
                cols.push(Col { metric, method, hops, name });
            }
        }
    }
    cols
}

fn header(c: &Config, curve: bool) -> Vec<String> {
    let mut h = vec![variable_name(c.sweep.variable).to_string()];
    if curve {
        h.push("curve".into());
    }
    for col in layout(c) {
        h.push(col.name.clone());
        if col.method == Method::Mc {
            h.push(format!("{}_ci_low", col.name));
            h.push(format!("{}_ci_high", col.name));
        }
    }
    h.push("reason".into());
    h
}

fn row(c: &Config, x: f64) -> Vec<Cell> {
    let pc = at_point(c, x);
    let gth = 10f64.powf(pc.sweep.gamma_th_db / 10.0);
    let mut cells = vec![Cell::Num(x)];
    let mut reasons: Vec<String> = Vec::new();
    for col in layout(c) {
        let r = scenario_for(&pc, col.hops)
            .and_then(|s| evaluate(&s, col.metric, col.method, gth, &pc.modulation, &pc.sweep.mc));
        let mc = col.method == Method::Mc;
        match r {
            Ok((v, ci)) => {
                cells.push(Cell::Num(v));
                if mc {
                    let (lo, hi) = ci.map_or((Cell::Na, Cell::Na), |(a, b)| (Cell::Num(a), Cell::Num(b)));
                    cells.push(lo);
                    cells.push(hi);
                }
            }
            Err(e) => {
                cells.push(Cell::Na);
                if mc {
                    cells.push(Cell::Na);
                    cells.push(Cell::Na);
                }
                reasons.push(format!("{}: {e}", col.name));
            }
        }
    }
    cells.push(if reasons.is_empty() { Cell::Na } else { Cell::Text(reasons.join("; ")) });
    cells
}

/// One row per grid point of `c.sweep`, in grid order.
pub fn run_sweep(c: &Config) -> Result<Table> {
    c.sweep.validate()?;
    let rows = c.sweep.grid.par_iter().map(|&x| row(c, x)).collect();
    Ok(drop_empty_reason(Table { columns: header(c, false), rows }))
}

/// The reason column is kept only when some cell is NA.
fn drop_empty_reason(mut t: Table) -> Table {
    if t.rows.iter().all(|r| matches!(r.last(), Some(Cell::Na))) {
        t.columns.pop();
        for r in &mut t.rows {
            r.pop();
        }
    }
    t
}

/// Several labelled configurations sharing one sweep layout, stacked with a
/// `curve` column.
pub fn run_curves(curves: &[(String, Config)]) -> Result<Table> {
    let Some((_, first)) = curves.first() else {
        return Ok(Table::default());
    };
    for (_, c) in curves {
        c.sweep.validate()?;
    }
    let jobs: Vec<(&String, &Config, f64)> =
        curves.iter().flat_map(|(l, c)| c.sweep.grid.iter().map(move |&x| (l, c, x))).collect();
    let rows = jobs
        .par_iter()
        .map(|&(label, c, x)| {
            let mut r = row(c, x);
            r.insert(1, Cell::Text(label.clone()));
            r
        })
        .collect();
    Ok(drop_empty_reason(Table { columns: header(first, true), rows }))
}
