use thzrelay::channel::*;

fn main() -> thzrelay::Result<()> {
    let p = PointingParams::from_s0_phi(0.054, 28.9576)?;
    let thz = ThzHop::new(FadingParams::new(2.0, 1.3, 1.0)?, p, 1e4)?;
    let rf = RfHop::new(FadingParams::new(2.0, 1.0, 1.0)?, 30.0)?;
    println!("snr          f_thz         F_thz         f_rf          F_rf");
    for db in [-10.0, 0.0, 5.0, 10.0, 15.0, 20.0] {
        let g = 10f64.powf(db / 10.0);
        println!(
            "{db:5} dB  {:.6e}  {:.6e}  {:.6e}  {:.6e}",
            snr_pdf_thz(g, &thz)?,
            snr_cdf_thz(g, &thz)?,
            snr_pdf_rf(g, &rf)?,
            snr_cdf_rf(g, &rf)?
        );
    }
    Ok(())
}
