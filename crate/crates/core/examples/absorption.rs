use thzrelay::channel::{absorption_coefficient, thz_path_gain, ThzLinkBudget};

fn main() -> thzrelay::Result<()> {
    println!("freq_ghz  k_per_m       loss_db_50m");
    for ghz in [275.0, 300.0, 325.0, 350.0, 380.0, 400.0] {
        let k = absorption_coefficient(ghz * 1e9, 296.0, 50.0, 101_325.0)?;
        println!("{ghz:8.1}  {k:.6e}  {:.4}", 10.0 * std::f64::consts::LOG10_E * k * 50.0);
    }
    let h = thz_path_gain(&ThzLinkBudget::default())?;
    println!("path gain at 275 GHz, 50 m: {h:.6} ({:.2} dB)", 20.0 * h.log10());
    Ok(())
}
