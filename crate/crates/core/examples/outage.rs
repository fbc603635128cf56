use thzrelay::analytic::{diversity_order, outage_exact, outage_high_snr};
use thzrelay::cli::Config;

fn main() -> thzrelay::Result<()> {
    let gth = 10f64.powf(0.4);
    let mut c = Config::default();
    c.thz.mu = 0.5;
    println!("diversity order {}", diversity_order(&c.scenario()?));
    for p in [0.0, 10.0, 20.0, 30.0, 40.0] {
        c.tx_power_dbm = p;
        let s = c.scenario()?;
        println!("{p:5} dBm  exact {:.5e}  high-snr {:.5e}", outage_exact(&s, gth)?, outage_high_snr(&s, gth)?);
    }
    Ok(())
}
