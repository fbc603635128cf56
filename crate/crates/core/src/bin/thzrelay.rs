use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use thzrelay::cli::{absorption_table, derive_table, mc_table, run_preset, run_sweep, selftest, Config, Format, Table};

#[derive(Parser)]
#[command(name = "thzrelay", version, about = "Dual-hop THz-RF relay link analysis")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Scenario file (TOML); defaults apply when omitted
    #[arg(long, global = true)]
    config: Option<String>,
    /// Output file; stdout when omitted
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Fmt,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte Carlo draws
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Verb {
    /// Molecular absorption and THz path gain
    Absorption {
        /// Carrier frequencies in GHz, comma separated
        #[arg(long, value_delimiter = ',')]
        freq_ghz: Vec<f64>,
    },
    /// Pointing statistics and closed-form constants
    Derive,
    /// Run the sweep described by the config
    Sweep,
    /// Reproduce a figure data set (fig2a .. fig5b)
    Preset { name: String },
    /// Monte Carlo estimates at the configured operating point
    Mc,
    /// Internal consistency checks
    Selftest,
}

fn run(cli: &Cli) -> thzrelay::Result<Option<Table>> {
    let mut cfg = match &cli.config {
        Some(p) => Config::from_file(p)?,
        None => Config::default(),
    };
    if let Some(s) = cli.seed {
        cfg.sweep.mc.seed = s;
    }
    if let Some(n) = cli.samples {
        cfg.sweep.mc.n_samples = n;
    }
    let mc = cfg.sweep.mc;
    Ok(Some(match &cli.verb {
        Verb::Absorption { freq_ghz } => {
            let f: Vec<f64> =
                if freq_ghz.is_empty() { vec![cfg.thz.freq_hz] } else { freq_ghz.iter().map(|g| g * 1e9).collect() };
            absorption_table(&cfg, &f)?
        }
        Verb::Derive => derive_table(&cfg)?,
        Verb::Sweep => run_sweep(&cfg)?,
        Verb::Preset { name } => {
            let over = (cli.seed.is_some() || cli.samples.is_some()).then_some(mc);
            run_preset(name, over)?
        }
        Verb::Mc => mc_table(&cfg, &mc)?,
        Verb::Selftest => {
            let res = selftest();
            let failed = res.iter().filter(|r| !r.1).count();
            for (name, ok, detail) in &res {
                println!("{} {name}: {detail}", if *ok { "PASS" } else { "FAIL" });
            }
            if failed > 0 {
                return Err(thzrelay::Error::Evaluation { op: "selftest", msg: format!("{failed} check(s) failed") });
            }
            return Ok(None);
        }
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let fmt = match cli.format {
        Fmt::Csv => Format::Csv,
        Fmt::Json => Format::Json,
    };
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(t)) => {
            let text = t.render(fmt);
            let w = match &cli.out {
                Some(p) => std::fs::write(p, text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = w {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
