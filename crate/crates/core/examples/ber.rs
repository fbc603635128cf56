use thzrelay::analytic::*;
use thzrelay::cli::Config;

fn main() -> thzrelay::Result<()> {
    let mut c = Config::default();
    c.sigma_s_cm = 15.0;
    c.rf.mu = 4.0;
    let coherent = Modulation::new(0.5, 1.0)?;
    for p in [-30.0, -20.0, -10.0, 0.0] {
        c.tx_power_dbm = p;
        let s = c.scenario()?;
        println!(
            "{p:5} dBm  dbpsk {:.5e} (quadrature {:.5e})  bpsk {:.5e}",
            ber_relay_inid(&s, &Modulation::dbpsk())?,
            ber_by_quadrature(&s, &Modulation::dbpsk())?,
            ber_relay_inid(&s, &coherent)?
        );
    }
    c.thz.alpha = 2.5;
    println!("{}", ber_relay_inid(&c.scenario()?, &Modulation::dbpsk()).unwrap_err());
    Ok(())
}
