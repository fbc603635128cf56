//! Direct numerical integration of the defining integrals; used to check the
//! closed forms and as the fallback where no closed form applies.

use super::{Modulation, Scenario};
use crate::channel::{e2e_cdf, e2e_pdf, e2e_survival};
use crate::error::{eval_err, Result};
use crate::quadrature::{integrate_positive, Estimate, QuadOptions};
use crate::specfun::{gamma_unchecked, reg_upper_gamma};
use std::f64::consts::LN_2;

fn opts(rel: f64) -> QuadOptions {
    QuadOptions { rel_tol: rel, max_intervals: 8000, ..Default::default() }
}

fn run(op: &'static str, f: &dyn Fn(f64) -> f64, scales: &[f64], rel: f64) -> Result<f64> {
    let Estimate { value, abs_error } = integrate_positive(f, scales, &opts(rel))?;
    if !value.is_finite() {
        return eval_err(op, format!("non-finite integral (error estimate {abs_error:e})"));
    }
    Ok(value)
}

/// ∫ γ^n f(γ) dγ.
pub fn moment_by_quadrature(s: &Scenario, n: f64) -> Result<f64> {
    let f = |g: f64| g.powf(n) * e2e_pdf(g, s).unwrap_or(f64::NAN);
    run("moment_by_quadrature", &f, &s.scales(), 1e-11)
}

/// ∫ log2(γ) f(γ) dγ, the E[log2 γ] capacity lower bound.
pub fn log_moment_by_quadrature(s: &Scenario) -> Result<f64> {
    let f = |g: f64| g.log2() * e2e_pdf(g, s).unwrap_or(f64::NAN);
    run("log_moment_by_quadrature", &f, &s.scales(), 1e-11)
}

/// (1/ln 2) ∫ (1 - F(γ))/(1 + γ) dγ.
pub fn capacity_by_quadrature(s: &Scenario) -> Result<f64> {
    let f = |g: f64| e2e_survival(g, s).unwrap_or(f64::NAN) / (1.0 + g);
    let mut sc = s.scales();
    sc.push(1.0);
    Ok(run("capacity_by_quadrature", &f, &sc, 1e-11)? / LN_2)
}

/// ∫ log2(1 + γ) f(γ) dγ.
pub fn capacity_by_pdf_quadrature(s: &Scenario) -> Result<f64> {
    let f = |g: f64| g.ln_1p() / LN_2 * e2e_pdf(g, s).unwrap_or(f64::NAN);
    let mut sc = s.scales();
    sc.push(1.0);
    run("capacity_by_pdf_quadrature", &f, &sc, 1e-11)
}

/// q^p/(2Γ(p)) ∫ γ^{p-1} e^{-qγ} F(γ) dγ.
pub fn ber_by_quadrature(s: &Scenario, m: &Modulation) -> Result<f64> {
    let lw = m.p * m.q.ln() - gamma_unchecked(m.p).ln() - 2f64.ln();
    let f = |g: f64| (lw + (m.p - 1.0) * g.ln() - m.q * g).exp() * e2e_cdf(g, s).unwrap_or(f64::NAN);
    let mut sc = s.scales();
    sc.push(1.0 / m.q);
    run("ber_by_quadrature", &f, &sc, 1e-12)
}

/// E[Γ(p, qγ)/(2Γ(p))] over the end-to-end density.
pub fn ber_by_pdf_quadrature(s: &Scenario, m: &Modulation) -> Result<f64> {
    let f = |g: f64| 0.5 * reg_upper_gamma(m.p, m.q * g).unwrap_or(f64::NAN) * e2e_pdf(g, s).unwrap_or(f64::NAN);
    let mut sc = s.scales();
    sc.push(1.0 / m.q);
    run("ber_by_pdf_quadrature", &f, &sc, 1e-12)
}
