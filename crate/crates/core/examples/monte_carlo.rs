use thzrelay::analytic::*;
use thzrelay::cli::preset;
use thzrelay::mc::*;

fn main() -> thzrelay::Result<()> {
    let (_, c) = preset("fig3b")?.remove(0);
    let s = c.scenario()?.with_tx_power_dbm(-20.0)?;
    let o = McOptions::new(1_000_000, 7);
    let gth = 10f64.powf(0.4);
    let show = |name: &str, e: McEstimate, exact: f64| {
        println!("{name:8} {:.6e} [{:.6e}, {:.6e}]  closed {exact:.6e}", e.mean, e.ci_low, e.ci_high)
    };
    show("outage", mc_outage(&s, gth, &o)?, outage_exact(&s, gth)?);
    show("mean", mc_mean_snr(&s, &o)?, moment_inid(&s, 1.0)?);
    show("aof", mc_amount_of_fading(&s, &o)?, amount_of_fading(&s)?);
    show("capacity", mc_capacity(&s, &o)?, capacity_relay_inid(&s)?);
    show("ber", mc_ber(&s, &Modulation::dbpsk(), &o)?, ber_relay_inid(&s, &Modulation::dbpsk())?);
    let x = sample_snrs(&s.clone().with_hops(Hops::ThzOnly), &o);
    println!("KS vs THz cdf {:.5}", ks_distance(&x, |g| s.thz.cdf(g).unwrap()));
    Ok(())
}
