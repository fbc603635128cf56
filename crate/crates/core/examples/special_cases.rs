use thzrelay::analytic::*;
use thzrelay::channel::*;

fn main() -> thzrelay::Result<()> {
    let p = PointingParams::from_s0_phi(0.054, 2.0)?;
    let rf = RfHop::new(FadingParams::rayleigh(), 10.0)?;
    let cases = [
        (SpecialCase::NakagamiRayleigh, FadingParams::new(2.0, 2.0, 1.0)?),
        (SpecialCase::WeibullRayleigh, FadingParams::new(4.0, 1.0, 1.0)?),
    ];
    for (case, fading) in cases {
        let s = Scenario::new(ThzHop::new(fading, p, 10.0)?, rf);
        for m in [SpecialMetric::AvgSnr, SpecialMetric::Capacity, SpecialMetric::Ber] {
            match metric_special_cases(&s, m, case) {
                Ok(r) => println!("{case:?} {m:?}: formula {:.6e} quadrature {:.6e} discrepancy {:+.3e} valid={}", r.value, r.oracle, r.discrepancy, r.valid),
                Err(e) => println!("{case:?} {m:?}: {e}"),
            }
        }
    }
    Ok(())
}
