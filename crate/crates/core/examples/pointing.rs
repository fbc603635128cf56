use thzrelay::channel::{pointing_params, PointingConfig};

fn main() -> thzrelay::Result<()> {
    for sigma_cm in [5.0, 8.0, 10.0, 15.0, 20.0] {
        let p = pointing_params(&PointingConfig::from_normalized(6.0, 0.1, sigma_cm / 100.0)?);
        println!("sigma_s = {sigma_cm:4} cm  S0 = {:.5}  phi = {:.4}", p.s0, p.phi);
    }
    // beams narrower than six aperture radii are outside the model
    println!("{}", PointingConfig::from_normalized(4.0, 0.1, 0.08).unwrap_err());
    Ok(())
}
