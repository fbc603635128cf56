use thzrelay::analytic::*;
use thzrelay::cli::preset;

fn main() -> thzrelay::Result<()> {
    let (_, c) = preset("fig3b")?.remove(0);
    let s = c.scenario()?;
    for n in [1.0, 2.0, 0.5] {
        println!("E[g^{n}]  closed {:.10e}  quadrature {:.10e}", moment_inid(&s, n)?, moment_by_quadrature(&s, n)?);
    }
    let t = moment_terms(&s, 1.0)?;
    println!("terms {:.4e} {:.4e} {:.4e} {:.4e}", t.g1, t.g2, t.g12, t.g21);
    println!("amount of fading {:.6}", amount_of_fading(&s)?);
    for h in [Hops::ThzOnly, Hops::RfOnly] {
        println!("{h:?} mean snr {:.4e}", moment_inid(&s.clone().with_hops(h), 1.0)?);
    }
    Ok(())
}
