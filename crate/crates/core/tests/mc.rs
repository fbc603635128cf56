use thzrelay::analytic::*;
use thzrelay::channel::*;
use thzrelay::mc::*;

fn fig3b() -> Scenario {
    let pc = PointingConfig::from_normalized(6.0, 0.1, 0.15).unwrap();
    let rb = RfLinkBudget { distance_m: 40.0, ..Default::default() };
    Scenario::from_budgets(
        FadingParams::new(2.0, 4.0, 1.0).unwrap(),
        pc,
        ThzLinkBudget::default(),
        FadingParams::rayleigh(),
        rb,
    )
    .unwrap()
}

fn ks_of(n: usize, seed: u64, draw: impl Fn(&mut rand_chacha::ChaCha8Rng) -> f64, cdf: impl Fn(f64) -> f64) -> f64 {
    let mut rng = stream_rng(seed, 0);
    let x: Vec<f64> = (0..n).map(|_| draw(&mut rng)).collect();
    ks_distance(&x, cdf)
}

#[test]
fn alpha_mu_envelope_ks() {
    for (a, m) in [(2.4, 1.7), (2.0, 0.5)] {
        let f = FadingParams::new(a, m, 1.0).unwrap();
        let d = ks_of(1_000_000, 5, |r| sample_alpha_mu(&f, r), |x| f.envelope_cdf(x));
        assert!(d < 0.002, "({a}, {m}): {d}");
    }
}

#[test]
fn pointing_gain_ks() {
    let p = pointing_params(&PointingConfig::from_normalized(6.0, 0.1, 0.08).unwrap());
    let d = ks_of(1_000_000, 6, |r| sample_pointing(&p, r), |h| p.cdf(h));
    assert!(d < 0.002, "{d}");
}

#[test]
fn strong_rf_hop_reduces_to_thz() {
    let mut s = fig3b();
    s = s.with_gamma0(s.thz.gamma0, 1e30).unwrap();
    let x = sample_snrs(&s, &McOptions::new(1_000_000, 9));
    let d = ks_distance(&x, |g| s.thz.cdf(g).unwrap());
    assert!(d < 0.003, "{d}");
}

#[test]
fn mean_snr_interval_contains_quadrature() {
    let s = fig3b();
    let e = mc_mean_snr(&s, &McOptions::new(1_000_000, 2)).unwrap();
    let q = moment_by_quadrature(&s, 1.0).unwrap();
    assert!(e.contains(q), "{e:?} vs {q}");
    assert!(((e.mean - q) / q).abs() < 0.01);
}

#[test]
fn outage_and_ber_agree_with_closed_forms() {
    let s = fig3b().with_tx_power_dbm(-20.0).unwrap();
    let g = 10f64.powf(0.4);
    let o = mc_outage(&s, g, &McOptions::new(400_000, 3)).unwrap();
    let exact = outage_exact(&s, g).unwrap();
    assert!((o.mean - exact).abs() < 4.0 * o.std_error, "{o:?} vs {exact}");
    let b = mc_ber(&s, &Modulation::dbpsk(), &McOptions::new(400_000, 4)).unwrap();
    let exact = ber_relay_inid(&s, &Modulation::dbpsk()).unwrap();
    assert!((b.mean - exact).abs() < 4.0 * b.std_error, "{b:?} vs {exact}");
    // the conditional error rate is heavy tailed here, small runs undershoot
    let b = mc_ber(&s, &Modulation::new(0.5, 1.0).unwrap(), &McOptions::new(1_000_000, 4)).unwrap();
    let exact = ber_by_quadrature(&s, &Modulation::new(0.5, 1.0).unwrap()).unwrap();
    assert!((b.mean - exact).abs() < 4.0 * b.std_error, "{b:?} vs {exact}");
}

#[test]
fn amount_of_fading_interval() {
    let s = fig3b();
    let e = mc_amount_of_fading(&s, &McOptions::new(1_000_000, 8)).unwrap();
    let exact = amount_of_fading(&s).unwrap();
    assert!((e.mean - exact).abs() < 4.0 * e.std_error, "{e:?} vs {exact}");
}

#[test]
fn capacity_above_lower_bound() {
    let s = fig3b().with_hops(Hops::RfOnly);
    let e = mc_capacity(&s, &McOptions::new(200_000, 1)).unwrap();
    assert!(e.ci_high >= capacity_lb_rf(&s).unwrap());
}

#[test]
fn identical_across_thread_counts() {
    let s = fig3b();
    let o = McOptions::new(100_000, 42);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| (mc_mean_snr(&s, &o).unwrap(), sample_snrs(&s, &o)))
    };
    let (a, xa) = run(1);
    let (b, xb) = run(3);
    assert_eq!(a.mean.to_bits(), b.mean.to_bits());
    assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    assert_eq!(xa, xb);
    let c = mc_mean_snr(&s, &McOptions::new(100_000, 43)).unwrap();
    assert_ne!(a.mean, c.mean);
}

#[test]
fn too_few_samples_rejected() {
    assert!(mc_mean_snr(&fig3b(), &McOptions::new(MIN_SAMPLES - 1, 1)).is_err());
    assert!(mc_outage(&fig3b(), -1.0, &McOptions::default()).is_err());
}

#[test]
fn zero_threshold_never_in_outage() {
    assert_eq!(mc_outage(&fig3b(), 0.0, &McOptions::new(MIN_SAMPLES, 1)).unwrap().mean, 0.0);
}
