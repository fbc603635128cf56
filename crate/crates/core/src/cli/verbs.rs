use super::config::Config;
use super::table::{Cell, Table};
use crate::analytic::{moment_by_quadrature, moment_inid, outage_exact, Scenario};
use crate::channel::{absorption_coefficient, pointing_params, thz_path_gain, PointingConfig};
use crate::error::Result;
use crate::mc::{mc_amount_of_fading, mc_ber, mc_capacity, mc_mean_snr, mc_outage, McEstimate, McOptions};
use crate::quadrature::{integrate_positive, QuadOptions};
use crate::specfun::{meijer_g, upper_gamma, MeijerSpec};

fn kv(rows: Vec<(&str, f64)>) -> Table {
    Table {
        columns: vec!["name".into(), "value".into()],
        rows: rows.into_iter().map(|(k, v)| vec![Cell::Text(k.into()), Cell::Num(v)]).collect(),
    }
}

/// Absorption coefficient and THz path gain over a frequency list.
pub fn absorption_table(c: &Config, freqs_hz: &[f64]) -> Result<Table> {
    let a = c.atmosphere;
    let mut rows = Vec::new();
    for &f in freqs_hz {
        let k = absorption_coefficient(f, a.temperature_k, a.humidity_pct, a.pressure_pa)?;
        let mut b = c.scenario()?.thz_budget.expect("built from budgets");
        b.freq_hz = f;
        let g = thz_path_gain(&b)?;
        rows.push(vec![
            Cell::Num(f),
            Cell::Num(k),
            Cell::Num(10.0 * k * c.thz.distance_m / std::f64::consts::LN_10),
            Cell::Num(20.0 * g.log10()),
        ]);
    }
    Ok(Table {
        columns: vec!["freq_hz".into(), "k_per_m".into(), "absorption_loss_db".into(), "path_gain_db".into()],
        rows,
    })
}

/// Pointing statistics, faded-free SNRs and the closed-form constants.
pub fn derive_table(c: &Config) -> Result<Table> {
    let s = c.scenario()?;
    let d = s.derived;
    let p = s.thz.pointing;
    Ok(kv(vec![
        ("s0", p.s0),
        ("phi", p.phi),
        ("w_zeq_m", p.w_zeq),
        ("gamma0_thz_db", 10.0 * d.gamma0_1.log10()),
        ("gamma0_rf_db", 10.0 * d.gamma0_2.log10()),
        ("noise_thz_dbm", c.thz_noise_dbm()),
        ("noise_rf_dbm", c.rf_noise_dbm()),
        ("a1", d.a1),
        ("b1", d.b1),
        ("c1", d.c1),
        ("a2", d.a2),
        ("b2", d.b2),
        ("epsilon", s.epsilon),
    ]))
}

/// Monte Carlo estimates of every metric at the configured operating point.
pub fn mc_table(c: &Config, opts: &McOptions) -> Result<Table> {
    let s = c.scenario()?;
    let gth = 10f64.powf(c.sweep.gamma_th_db / 10.0);
    let ests: Vec<(&str, McEstimate)> = vec![
        ("outage", mc_outage(&s, gth, opts)?),
        ("avg_snr", mc_mean_snr(&s, opts)?),
        ("aof", mc_amount_of_fading(&s, opts)?),
        ("capacity", mc_capacity(&s, opts)?),
        ("ber", mc_ber(&s, &c.modulation, opts)?),
    ];
    let columns = ["metric", "mean", "ci_low", "ci_high", "std_error", "n_samples", "seed", "n_streams"];
    Ok(Table {
        columns: columns.iter().map(|s| s.to_string()).collect(),
        rows: ests
            .into_iter()
            .map(|(m, e)| {
                vec![
                    Cell::Text(m.into()),
                    Cell::Num(e.mean),
                    Cell::Num(e.ci_low),
                    Cell::Num(e.ci_high),
                    Cell::Num(e.std_error),
                    Cell::Num(e.n_samples as f64),
                    Cell::Num(e.seed as f64),
                    Cell::Num(e.n_streams as f64),
                ]
            })
            .collect(),
    })
}

/// Quick internal consistency checks: (name, passed, detail).
pub fn selftest() -> Vec<(String, bool, String)> {
    let mut out = Vec::new();
    let mut push = |name: &str, r: Result<(bool, String)>| {
        let (ok, d) = r.unwrap_or_else(|e| (false, e.to_string()));
        out.push((name.to_string(), ok, d));
    };
    push("pointing_calibration", (|| {
        let p = pointing_params(&PointingConfig::from_normalized(6.0, 0.1, 0.08)?);
        Ok(((p.s0 - 0.054).abs() <= 1e-3 && (p.phi / 28.9576 - 1.0).abs() <= 1e-3, format!("s0={} phi={}", p.s0, p.phi)))
    })());
    push("meijer_identities", (|| {
        // G^{1,0}_{0,1}(z|0) = e^{-z}, G^{2,0}_{1,2}(z|1; a, 0) = Γ(a, z)
        let z = 1.7;
        let e = meijer_g(&MeijerSpec::new(1, 0, vec![], vec![0.0]), z)?.value;
        let g = meijer_g(&MeijerSpec::new(2, 0, vec![1.0], vec![0.6, 0.0]), z)?.value;
        let ug = upper_gamma(0.6, z)?;
        let err = ((e / (-z).exp() - 1.0).abs()).max((g / ug - 1.0).abs());
        Ok((err < 1e-10, format!("max relative error {err:e}")))
    })());
    let base = Config::default();
    push("pdf_normalization", (|| {
        let s = base.scenario()?;
        let f = |g: f64| s.thz.pdf(g).unwrap_or(f64::NAN);
        let scales = [s.thz.gamma0, 1.0];
        let v = integrate_positive(&f, &scales, &QuadOptions::default())?.value;
        Ok(((v - 1.0).abs() < 1e-8, format!("integral={v}")))
    })());
    push("moment_closed_vs_quadrature", (|| {
        let mut c = base.clone();
        c.thz.mu = 2.0;
        let s = c.scenario()?;
        let (a, b) = (moment_inid(&s, 1.0)?, moment_by_quadrature(&s, 1.0)?);
        Ok((((a - b) / b).abs() < 1e-6, format!("closed={a} quadrature={b}")))
    })());
    push("mc_outage", (|| {
        let mut c = base.clone();
        c.tx_power_dbm = -15.0;
        let s: Scenario = c.scenario()?;
        let gth = 10f64.powf(0.4);
        let exact = outage_exact(&s, gth)?;
        let e = mc_outage(&s, gth, &McOptions::new(200_000, 11))?;
        let tol = 4.0 * e.std_error + 1e-12;
        Ok(((e.mean - exact).abs() <= tol, format!("mc={} exact={exact}", e.mean)))
    })());
    out
}
