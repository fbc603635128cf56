//! Special functions: gamma family, incomplete gamma, Gauss hypergeometric and
//! the Meijer G-function.

mod gamma;
mod hyper;
mod incgamma;
mod meijer;

pub use gamma::{digamma, gamma_fn, ln_gamma, ln_gamma_complex, EULER_GAMMA};
pub(crate) use gamma::{gamma_unchecked, ln_gamma_signed, ln_gamma_unchecked};
pub use gamma::ln_gamma_complex as log_gamma;
pub use incgamma::erf as erf_fn;
pub use hyper::{gauss_2f1, regularized_2f1};
pub use incgamma::{
    erf, erfc, lower_gamma, reg_lower_gamma, reg_upper_gamma, upper_gamma, upper_gamma_scaled,
};
pub use meijer::{meijer_g, meijer_g_with, MeijerOptions, MeijerSpec, MeijerValue};
pub(crate) use meijer::meijer_g_log;

use crate::error::{domain, Result};

/// Δ(k, a) = [a/k, (a+1)/k, ..., (a+k-1)/k].
pub fn delta_params(k: usize, a: f64) -> Result<Vec<f64>> {
    if k == 0 {
        return domain("delta_params", "k must be positive");
    }
    Ok((0..k).map(|j| (a + j as f64) / k as f64).collect())
}
