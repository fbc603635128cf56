//! Configuration files, figure presets, parameter sweeps and table output.

mod config;
mod presets;
mod sweep;
mod table;
mod verbs;

pub use config::{Config, HopConfig, Method, Metric, NoiseMode, SweepSpec, Variable};
pub use presets::{preset, PRESETS};
pub use sweep::{at_point, evaluate, outage_by_quadrature, run_curves, run_sweep, scenario_for};
pub use table::{Cell, Format, Table};
pub use verbs::{absorption_table, derive_table, mc_table, selftest};

use crate::error::Result;

/// Table for a named preset, with the Monte Carlo settings replaced when given.
pub fn run_preset(name: &str, mc: Option<crate::mc::McOptions>) -> Result<Table> {
    let mut curves = preset(name)?;
    if let Some(m) = mc {
        for (_, c) in &mut curves {
            c.sweep.mc = m;
        }
    }
    run_curves(&curves)
}
