use proptest::prelude::*;
use thzrelay::analytic::*;
use thzrelay::channel::*;
use thzrelay::specfun::{upper_gamma, EULER_GAMMA};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn direct(a1: f64, m1: f64, s0: f64, phi: f64, g1: f64, a2: f64, m2: f64, g2: f64) -> Scenario {
    let thz = ThzHop::new(FadingParams::new(a1, m1, 1.0).unwrap(), PointingParams::from_s0_phi(s0, phi).unwrap(), g1)
        .unwrap();
    let rf = RfHop::new(FadingParams::new(a2, m2, 1.0).unwrap(), g2).unwrap();
    Scenario::new(thz, rf)
}

fn budget(a1: f64, m1: f64, a2: f64, m2: f64, sigma: f64, p: f64) -> Scenario {
    let pc = PointingConfig::from_normalized(6.0, 0.1, sigma).unwrap();
    let mut tb = ThzLinkBudget::default();
    let mut rb = RfLinkBudget::default();
    tb.tx_power_dbm = p;
    rb.tx_power_dbm = p;
    rb.distance_m = 40.0;
    Scenario::from_budgets(FadingParams::new(a1, m1, 1.0).unwrap(), pc, tb, FadingParams::new(a2, m2, 1.0).unwrap(), rb)
        .unwrap()
}

// THz (2, 2), S0 = 0.054, φ = 8.2368, γ1⁰ = 1e4; RF Rayleigh γ2⁰ = 30.
// Reference values from a 20-digit double integral over the amplitude domain.
fn reference() -> Scenario {
    direct(2.0, 2.0, 0.054, 8.2368, 1e4, 2.0, 1.0, 30.0)
}

#[test]
fn relay_metrics_reference() {
    let s = reference();
    assert!(rel(moment_inid(&s, 1.0).unwrap(), 14.335_292_700_535_283) < 1e-8);
    assert!(rel(moment_inid(&s, 2.0).unwrap(), 346.399_031_005_597_7) < 1e-8);
    assert!(rel(capacity_relay_inid(&s).unwrap(), 3.492_478_317_471_260_4) < 1e-8);
    assert!(rel(ber_relay_inid(&s, &Modulation::dbpsk()).unwrap(), 0.019_466_337_165_402_274) < 1e-8);
}

#[test]
fn closed_forms_match_quadrature() {
    let cases = [
        reference(),
        budget(2.0, 4.0, 2.0, 1.0, 0.15, 10.0),
        budget(3.0, 1.0, 2.0, 4.0, 0.15, 0.0),
        budget(1.0, 1.0, 2.0, 4.0, 0.15, 10.0),
    ];
    for s in cases {
        for hops in [Hops::Relay, Hops::ThzOnly, Hops::RfOnly] {
            let s = s.clone().with_hops(hops);
            let m = Modulation::dbpsk();
            assert!(rel(moment_inid(&s, 1.0).unwrap(), moment_by_quadrature(&s, 1.0).unwrap()) < 1e-7);
            assert!(rel(capacity_relay_inid(&s).unwrap(), capacity_by_quadrature(&s).unwrap()) < 1e-7);
            assert!(rel(ber_relay_inid(&s, &m).unwrap(), ber_by_quadrature(&s, &m).unwrap()) < 1e-7);
        }
    }
}

#[test]
fn identical_fading_moments() {
    let s = direct(2.0, 2.0, 0.054, 8.2368, 300.0, 2.0, 2.0, 100.0);
    for n in [1.0, 2.0, 0.5] {
        assert!(rel(moment_iid(&s, n).unwrap(), moment_inid(&s, n).unwrap()) < 1e-6, "n={n}");
    }
    assert!(moment_iid(&reference(), 1.0).is_err());
}

#[test]
fn moment_terms_add_up() {
    let t = moment_terms(&reference(), 1.0).unwrap();
    assert!(rel(t.g1 + t.g2 - t.g12 - t.g21, t.total) < 1e-6);
}

#[test]
fn amount_of_fading_from_moments() {
    let s = reference();
    let aof = amount_of_fading(&s).unwrap();
    assert!(rel(aof, 346.399_031_005_597_7 / 14.335_292_700_535_283f64.powi(2) - 1.0) < 1e-7);
}

#[test]
fn rayleigh_dbpsk() {
    for g in [0.3, 10.0, 1e3] {
        let s = direct(2.0, 1.0, 0.054, 8.0, 10.0, 2.0, 1.0, g).with_hops(Hops::RfOnly);
        let v = ber_rf(&s, &Modulation::dbpsk()).unwrap();
        assert!((v - 0.5 / (1.0 + g)).abs() < 1e-10, "{v}");
    }
}

#[test]
fn ber_integration_by_parts() {
    let s = budget(2.0, 1.0, 2.0, 4.0, 0.15, -5.0);
    for m in [Modulation::dbpsk(), Modulation::new(0.5, 1.0).unwrap(), Modulation::new(1.5, 0.7).unwrap()] {
        assert!(rel(ber_by_quadrature(&s, &m).unwrap(), ber_by_pdf_quadrature(&s, &m).unwrap()) < 1e-8);
    }
}

#[test]
fn capacity_quadrature_forms_agree() {
    let s = reference();
    assert!(rel(capacity_by_quadrature(&s).unwrap(), capacity_by_pdf_quadrature(&s).unwrap()) < 1e-9);
}

#[test]
fn rayleigh_capacity_lower_bound() {
    let s = direct(2.0, 1.0, 0.054, 8.0, 10.0, 2.0, 1.0, 1e3).with_hops(Hops::RfOnly);
    let lb = capacity_lb_rf(&s).unwrap();
    assert!(rel(lb, (1e3f64.ln() - EULER_GAMMA) / std::f64::consts::LN_2) < 1e-12);
    assert!(lb <= capacity_rf(&s).unwrap());
}

#[test]
fn thz_lower_bound_is_log_moment() {
    let s = budget(2.0, 2.0, 2.0, 1.0, 0.15, 10.0).with_hops(Hops::ThzOnly);
    assert!((capacity_lb_thz(&s).unwrap() - log_moment_by_quadrature(&s).unwrap()).abs() < 1e-8);
}

#[test]
fn identical_fading_capacity_bound() {
    let s = budget(2.0, 1.0, 2.0, 1.0, 0.15, 10.0);
    let t = capacity_relay_iid(&s).unwrap();
    let q = log_moment_by_quadrature(&s).unwrap();
    assert!((t.total() - q).abs() < 1e-7, "{} vs {q}", t.total());
    assert!(t.total() <= capacity_by_quadrature(&s).unwrap());
}

#[test]
fn asymptotic_variants() {
    let m = Modulation::dbpsk();
    for p in [-10.0, 10.0, 30.0] {
        let s = budget(2.0, 2.0, 2.0, 1.0, 0.15, p);
        assert!(rel(ber_relay_inid_asymptotic(&s, &m).unwrap(), ber_relay_inid(&s, &m).unwrap()) < 1e-3);
        // the large-argument form drops the pointing term where capacity lives
        let (a, e) = (capacity_relay_inid_asymptotic(&s).unwrap(), capacity_relay_inid(&s).unwrap());
        assert!(a < e && e - a < 1.5, "{a} vs {e}");
    }
}

#[test]
fn non_integer_shape_is_a_domain_error() {
    let s = budget(2.5, 1.0, 2.0, 4.0, 0.15, 10.0);
    assert!(matches!(ber_relay_inid(&s, &Modulation::dbpsk()), Err(thzrelay::Error::Domain { .. })));
    let s = budget(2.0, 1.5, 2.0, 1.0, 0.15, 10.0);
    assert!(capacity_relay_inid(&s).is_err());
    assert!(capacity_by_quadrature(&s).is_ok());
}

#[test]
fn outage_asymptotics() {
    let g = 10f64.powf(0.4);
    let s = budget(2.0, 0.5, 2.0, 1.0, 0.08, 45.0);
    assert!(rel(outage_high_snr(&s, g).unwrap(), outage_exact(&s, g).unwrap()) < 0.1);
    assert_eq!(diversity_order(&s), 0.5);
    // a regime where the THz hop is nearly always in outage
    let s = direct(2.0, 1.0, 0.054, 8.0, 1e-3, 2.0, 1.0, 1e-3);
    assert!(rel(outage_low_snr(&s, g).unwrap(), outage_exact(&s, g).unwrap()) < 0.1);
}

#[test]
fn special_case_formulas() {
    // Weibull-Rayleigh capacity at γ2⁰ = 1: e Γ(0, 1)/ln 2
    let v = SpecialCase::WeibullRayleigh.formula(SpecialMetric::Capacity, 1.0, 1.0, 1.0, 2.0);
    let want = std::f64::consts::E * upper_gamma(0.0, 1.0).unwrap() / std::f64::consts::LN_2;
    assert!(rel(v, want) < 1e-12);
    assert!((v - 0.8604).abs() < 1e-4);
    let s = direct(2.0, 2.0, 0.054, 2.0, 10.0, 2.0, 1.0, 10.0);
    let r = metric_special_cases(&s, SpecialMetric::AvgSnr, SpecialCase::NakagamiRayleigh).unwrap();
    assert_eq!(r.discrepancy, r.value - r.oracle);
    assert!(r.oracle > 0.0);
    assert!(metric_special_cases(&reference(), SpecialMetric::Ber, SpecialCase::NakagamiRayleigh).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relay_metrics_ordered(p in -10.0f64..30.0, mu in 1usize..4) {
        let s = budget(2.0, mu as f64, 2.0, 1.0, 0.15, p);
        let relay = capacity_relay_inid(&s).unwrap();
        let thz = capacity_relay_inid(&s.clone().with_hops(Hops::ThzOnly)).unwrap();
        let rf = capacity_relay_inid(&s.clone().with_hops(Hops::RfOnly)).unwrap();
        prop_assert!(relay <= thz.min(rf) + 1e-9);
        let b = ber_relay_inid(&s, &Modulation::dbpsk()).unwrap();
        prop_assert!((0.0..=0.5).contains(&b));
    }

    #[test]
    fn moments_satisfy_jensen(p in -10.0f64..30.0) {
        let s = budget(2.0, 2.0, 2.0, 1.0, 0.15, p);
        let m1 = moment_inid(&s, 1.0).unwrap();
        let m2 = moment_inid(&s, 2.0).unwrap();
        prop_assert!(m2 >= m1 * m1);
        prop_assert!(amount_of_fading(&s).unwrap() >= 0.0);
    }

    #[test]
    fn outage_monotone_in_threshold(lg in -3.0f64..3.0) {
        let s = reference();
        let g = 10f64.powf(lg);
        prop_assert!(outage_exact(&s, 2.0 * g).unwrap() >= outage_exact(&s, g).unwrap());
    }
}
