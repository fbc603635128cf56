use thzrelay::cli::{run_preset, Format, PRESETS};
use thzrelay::mc::McOptions;

fn main() -> thzrelay::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig5b".into());
    if !PRESETS.contains(&name.as_str()) {
        eprintln!("presets: {}", PRESETS.join(", "));
        std::process::exit(2);
    }
    let t = run_preset(&name, Some(McOptions::new(50_000, 1)))?;
    print!("{}", t.render(Format::Csv));
    Ok(())
}
