use thzrelay::cli::{derive_table, run_sweep, Config, Format};

const SCENARIO: &str = r#"
thz.mu = 2
rf.mu = 4
pointing.sigma_s_cm = 15

[sweep]
variable = "distance_split"
total_distance_m = 100
grid = "20:80:20"
metrics = ["avg_snr", "ber"]
methods = ["closed", "quadrature"]
"#;

fn main() -> thzrelay::Result<()> {
    let c = Config::parse(SCENARIO)?;
    print!("{}", derive_table(&c)?.render(Format::Csv));
    println!();
    print!("{}", run_sweep(&c)?.render(Format::Json));
    match Config::parse("thz.alpah = 2") {
        Err(e) => println!("\n{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
