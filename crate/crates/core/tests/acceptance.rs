//! One PASS/FAIL line per acceptance criterion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thzrelay::analytic::*;
use thzrelay::channel::*;
use thzrelay::cli::{preset, run_preset, at_point, Config};
use thzrelay::mc::*;
use thzrelay::quadrature::{integrate_positive, QuadOptions};
use thzrelay::specfun::{gamma_fn, lower_gamma, meijer_g, upper_gamma, MeijerSpec};
use thzrelay::Result;

mod common;
use common::{moment_shaped, G_TABLE};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

type Check = Result<(bool, String)>;

fn pointing(sigma_cm: f64) -> PointingParams {
    pointing_params(&PointingConfig::from_normalized(6.0, 0.1, sigma_cm / 100.0).unwrap())
}

fn c1_pointing() -> Check {
    let a = pointing(8.0);
    let b = pointing(15.0);
    let ok = (a.s0 - 0.054).abs() <= 0.001 && rel(a.phi, 28.9576) <= 1e-3 && rel(b.phi, 8.2368) <= 1e-3;
    Ok((ok, format!("S0={:.5} phi(8cm)={:.4} phi(15cm)={:.4}", a.s0, a.phi, b.phi)))
}

fn c2_thz_cdf_ks() -> Check {
    let mut worst: f64 = 0.0;
    let mut detail = Vec::new();
    for (i, mu) in [0.5, 1.3, 2.0, 2.7].into_iter().enumerate() {
        let mut c = Config::default();
        c.thz.mu = mu;
        c.hops = Hops::ThzOnly;
        let s = c.scenario()?;
        let x = sample_snrs(&s, &McOptions::new(1_000_000, 100 + i as u64));
        let d = ks_distance(&x, |g| snr_cdf_thz(g, &s.thz).unwrap());
        worst = worst.max(d);
        detail.push(format!("mu1={mu}: {d:.5}"));
    }
    Ok((worst < 0.003, format!("KS {}", detail.join(", "))))
}

fn c3_normalization() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    let opts = QuadOptions { rel_tol: 1e-12, ..Default::default() };
    for _ in 0..20 {
        let f1 = FadingParams::new(rng.gen_range(0.7..4.0), rng.gen_range(0.3..4.0), 1.0)?;
        let p = PointingParams::from_s0_phi(rng.gen_range(0.01..1.0), rng.gen_range(0.5..30.0))?;
        let g1 = 10f64.powf(rng.gen_range(-1.0..4.0));
        let thz = ThzHop::new(f1, p, g1)?;
        let rf = RfHop::new(FadingParams::new(rng.gen_range(0.7..4.0), rng.gen_range(0.3..4.0), 1.0)?, g1)?;
        let scale1 = g1 * p.s0 * p.s0;
        let i1 = integrate_positive(&|g| thz.pdf(g).unwrap_or(f64::NAN), &[scale1, g1], &opts)?.value;
        let i2 = integrate_positive(&|g| rf.pdf(g).unwrap_or(f64::NAN), &[g1], &opts)?.value;
        let tail = 1.0 - thz.cdf(scale1 * 1e12)?;
        worst = worst.max((i1 - 1.0).abs()).max((i2 - 1.0).abs()).max(tail.abs());
    }
    Ok((worst <= 1e-8, format!("max deviation {worst:.2e} over 20 tuples")))
}

fn fig3b(p: f64) -> Result<Scenario> {
    let (_, c) = preset("fig3b")?.remove(0);
    at_point(&c, p).scenario()
}

fn c4_moments() -> Check {
    let s = fig3b(10.0)?;
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [1.0, 2.0] {
        let (t, q) = (moment_inid(&s, n)?, moment_by_quadrature(&s, n)?);
        let e = mc_moment(&s, n, &McOptions::new(10_000_000, 40 + n as u64))?;
        ok &= rel(t, q) <= 1e-4 && e.contains(q);
        detail.push(format!("n={n}: closed/quad {:.1e}, mc [{:.5e}, {:.5e}] quad {q:.5e}", rel(t, q), e.ci_low, e.ci_high));
        // identical fading variant for the i.i.d. form
        let iid = Scenario::new(s.thz, RfHop::new(s.thz.fading, s.rf.gamma0)?);
        let (l, q) = (moment_iid(&iid, n)?, moment_by_quadrature(&iid, n)?);
        ok &= rel(l, q) <= 1e-4;
        detail.push(format!("iid {:.1e}", rel(l, q)));
    }
    Ok((ok, detail.join("; ")))
}

fn last_decade_slope(s: &Scenario) -> Result<f64> {
    let g = 10f64.powf(0.4);
    let mut pts: Vec<f64> = Vec::new();
    for k in 0..150 {
        let x = 10f64.powi(k);
        match outage_exact(&s.with_gamma0(x, x)?, g) {
            Ok(v) if v > 1e-290 => pts.push(v.log10()),
            _ => break,
        }
    }
    let n = pts.len();
    Ok(pts[n - 2] - pts[n - 1])
}

fn c5_diversity() -> Check {
    let hop = |a1, m1, phi| ThzHop::new(FadingParams::new(a1, m1, 1.0).unwrap(), PointingParams::from_s0_phi(0.054, phi).unwrap(), 1.0);
    let rf = |a2, m2| RfHop::new(FadingParams::new(a2, m2, 1.0).unwrap(), 1.0);
    let cases = [
        ("THz-limited", Scenario::new(hop(2.0, 0.5, 28.9576)?, rf(2.0, 1.0)?), 0.5),
        ("RF-limited", Scenario::new(hop(2.0, 4.0, 28.9576)?, rf(2.0, 1.0)?), 1.0),
        ("pointing-limited", Scenario::new(hop(2.0, 2.0, 1.0)?, rf(2.0, 2.0)?), 0.5),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, s, want) in cases {
        let slope = last_decade_slope(&s)?;
        ok &= rel(slope, want) <= 0.05 && diversity_order(&s) == want;
        detail.push(format!("{name} {slope:.4}"));
    }
    Ok((ok, detail.join(", ")))
}

fn c6_capacity() -> Check {
    let mut worst: f64 = 0.0;
    let mut bounds_ok = true;
    for name in ["fig4a", "fig4b"] {
        for (_, c) in preset(name)? {
            for &p in &c.sweep.grid {
                let s = at_point(&c, p).scenario()?;
                worst = worst.max(rel(capacity_relay_inid(&s)?, capacity_by_quadrature(&s)?));
                let t = s.clone().with_hops(Hops::ThzOnly);
                if moment_by_quadrature(&t, 1.0)? >= 10.0 {
                    bounds_ok &= capacity_lb_thz(&t)? <= capacity_by_quadrature(&t)?;
                }
                let r = s.clone().with_hops(Hops::RfOnly);
                if moment_by_quadrature(&r, 1.0)? >= 10.0 {
                    bounds_ok &= capacity_lb_rf(&r)? <= capacity_by_quadrature(&r)?;
                }
            }
        }
    }
    let mut gap: f64 = 0.0;
    let mut c = Config::default();
    c.sigma_s_cm = 15.0;
    c.thz.mu = 2.0;
    c.rf.mu = 2.0;
    for (i, p) in [-10.0, 10.0, 30.0].into_iter().enumerate() {
        c.tx_power_dbm = p;
        let s = c.scenario()?;
        let e = mc_capacity(&s, &McOptions::new(1_000_000, 60 + i as u64))?;
        gap = gap.max((capacity_relay_iid(&s)?.total() - e.mean).abs());
    }
    let ok = worst <= 0.02 && gap <= 0.1 && bounds_ok;
    Ok((ok, format!("closed vs quadrature {worst:.1e}, iid vs mc {gap:.4} bits, bounds below capacity: {bounds_ok}")))
}

fn c7_ber() -> Check {
    let m = Modulation::dbpsk();
    let mut c = Config::default();
    c.sigma_s_cm = 15.0;
    let mut mc_worst: f64 = 0.0;
    for (i, p) in [-30.0, -20.0, -10.0].into_iter().enumerate() {
        c.tx_power_dbm = p;
        let s = c.scenario()?;
        let b = ber_relay_inid(&s, &m)?;
        let e = mc_ber(&s, &m, &McOptions::new(10_000_000, 70 + i as u64))?;
        mc_worst = mc_worst.max(rel(b, e.mean));
    }
    let mut approx: f64 = 0.0;
    let curves = preset("fig5a")?.into_iter().chain(preset("fig4a")?);
    for (label, c) in curves {
        if label.contains("alpha1=2.5") {
            continue;
        }
        for &p in &c.sweep.grid {
            let s = at_point(&c, p).scenario()?;
            approx = approx.max(rel(ber_relay_inid_asymptotic(&s, &m)?, ber_by_quadrature(&s, &m)?));
        }
    }
    let mut rayleigh: f64 = 0.0;
    for g in [0.1, 1.0, 10.0, 1e3, 1e6] {
        let s = Scenario::new(ThzHop::new(FadingParams::rayleigh(), pointing(8.0), g)?, RfHop::new(FadingParams::rayleigh(), g)?)
            .with_hops(Hops::RfOnly);
        rayleigh = rayleigh.max((ber_rf(&s, &m)? - 0.5 / (1.0 + g)).abs());
    }
    let ok = mc_worst <= 0.02 && approx <= 0.05 && rayleigh <= 1e-10;
    Ok((ok, format!("iid vs mc {mc_worst:.2e}, approximation vs quadrature {approx:.1e}, Rayleigh DBPSK {rayleigh:.1e}")))
}

fn c8_presets() -> Check {
    let mc = Some(McOptions::new(MIN_SAMPLES, 1));
    let t = run_preset("fig4b", mc)?;
    let x = t.values("tx_power_dbm").unwrap();
    let relay = t.values("avg_snr_closed_relay").unwrap();
    let thz = t.values("avg_snr_closed_thz_only").unwrap();
    let gains: Vec<f64> = (0..x.len())
        .filter(|&i| (5.0..=25.0).contains(&x[i].unwrap()))
        .map(|i| 10.0 * (relay[i].unwrap() / thz[i].unwrap()).log10())
        .collect();
    let in_window = gains.iter().all(|g| (4.0..=6.0).contains(g));
    let t = run_preset("fig5b", mc)?;
    let d = t.values("thz_distance_m").unwrap();
    let b = t.values("ber_closed").unwrap();
    let best = (0..b.len()).min_by(|&i, &j| b[i].unwrap().total_cmp(&b[j].unwrap())).unwrap();
    let lo = gains.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = gains.iter().cloned().fold(0.0, f64::max);
    Ok((in_window && best == 0, format!("relay gain {lo:.2}..{hi:.2} dB, fig5b BER minimum at d1={}", d[best].unwrap())))
}

fn c9_meijer() -> Check {
    let mut ident: f64 = 0.0;
    for z in [0.1, 1.0, 7.5] {
        ident = ident.max(rel(meijer_g(&MeijerSpec::new(1, 0, vec![], vec![0.0]), z)?.value, (-z).exp()));
        for a in [0.5, 2.5] {
            let up = meijer_g(&MeijerSpec::new(2, 0, vec![1.0], vec![0.0, a]), z)?.value;
            ident = ident.max(rel(up, upper_gamma(a, z)?));
            let lo = meijer_g(&MeijerSpec::new(1, 1, vec![1.0], vec![a, 0.0]), z)?.value;
            ident = ident.max(rel(lo, lower_gamma(a, z)?));
            let pw = meijer_g(&MeijerSpec::new(1, 1, vec![1.0 - a], vec![0.0]), z)?.value;
            ident = ident.max(rel(pw, gamma_fn(a)? * (1.0 + z).powf(-a)));
        }
    }
    let mut table: f64 = 0.0;
    for &(a1, a2, mu2, phi, mu1, n, z, want) in G_TABLE {
        table = table.max(rel(meijer_g(&moment_shaped(a1, a2, mu2, phi, mu1, n), z)?.value, want));
    }
    Ok((ident <= 1e-10 && table <= 1e-8, format!("identities {ident:.1e}, {} table calls {table:.1e}", G_TABLE.len())))
}

fn c10_determinism() -> Check {
    let s = fig3b(0.0)?;
    let o = McOptions::new(200_000, 99);
    let g = 10f64.powf(0.4);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            (mc_outage(&s, g, &o).unwrap(), mc_ber(&s, &Modulation::dbpsk(), &o).unwrap(), sample_snrs(&s, &o))
        })
    };
    let (a, b, c) = (run(1), run(1), run(2));
    let same = |x: &(McEstimate, McEstimate, Vec<f64>), y: &(McEstimate, McEstimate, Vec<f64>)| {
        x.0.mean.to_bits() == y.0.mean.to_bits() && x.1.mean.to_bits() == y.1.mean.to_bits() && x.2 == y.2
    };
    Ok((same(&a, &b) && same(&a, &c), "seed 99 reruns bit-identical on 1 and 2 threads".into()))
}

fn main() {
    let checks: [(&str, fn() -> Check); 10] = [
        ("pointing calibration", c1_pointing),
        ("THz CDF vs sampling", c2_thz_cdf_ks),
        ("normalization", c3_normalization),
        ("moment triangle", c4_moments),
        ("diversity order", c5_diversity),
        ("capacity", c6_capacity),
        ("BER", c7_ber),
        ("relay vs direct presets", c8_presets),
        ("special functions", c9_meijer),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        let t = std::time::Instant::now();
        let (ok, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        failed += !ok as usize;
        println!("criterion {:>2} {} {name}: {detail} ({:.1}s)", i + 1, if ok { "PASS" } else { "FAIL" }, t.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
