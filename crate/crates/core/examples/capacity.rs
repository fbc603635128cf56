use thzrelay::analytic::*;
use thzrelay::cli::Config;

fn main() -> thzrelay::Result<()> {
    let mut c = Config::default();
    c.sigma_s_cm = 15.0;
    c.thz.mu = 2.0;
    c.rf.mu = 2.0;
    println!("p_dbm  closed    quadrature  asymptotic  iid_terms  thz_bound  rf_bound");
    for p in [-10.0, 0.0, 10.0, 20.0] {
        c.tx_power_dbm = p;
        let s = c.scenario()?;
        println!(
            "{p:5}  {:.5}  {:.5}    {:.5}     {:.5}    {:.5}    {:.5}",
            capacity_relay_inid(&s)?,
            capacity_by_quadrature(&s)?,
            capacity_relay_inid_asymptotic(&s)?,
            capacity_relay_iid(&s)?.total(),
            capacity_lb_thz(&s.clone().with_hops(Hops::ThzOnly))?,
            capacity_lb_rf(&s.clone().with_hops(Hops::RfOnly))?,
        );
    }
    Ok(())
}
