//! Incomplete gamma functions, including the upper function at negative order.

use super::gamma::{gamma1pm1_over_a, gamma_unchecked, ln_gamma_unchecked};
use crate::error::{domain, Error, Result};

const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;
const MAX_ITER: usize = 100_000;

/// Series Σ x^n / (a (a+1) ... (a+n)); returns the sum (times a).
fn lower_series(a: f64, x: f64) -> Result<f64> {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut ap = a;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * EPS {
            return Ok(sum);
        }
    }
    Err(Error::Convergence { op: "lower_gamma series", msg: format!("a={a}, x={x}") })
}

/// Continued fraction for Γ(a,x) x^{-a} e^{x}; valid for every real a, x > 0.
fn upper_cf(a: f64, x: f64) -> Result<f64> {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = if b.abs() < TINY { 1.0 / TINY } else { 1.0 / b };
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 4.0 * f64::EPSILON {
            return Ok(h);
        }
    }
    Err(Error::Convergence { op: "upper_gamma continued fraction", msg: format!("a={a}, x={x}") })
}

/// Γ(a,x) for |a| < 0.5 and moderate x, free of the 1/a cancellation.
fn upper_near_zero(a: f64, x: f64) -> f64 {
    let lx = x.ln();
    let head = gamma1pm1_over_a(a) - if a == 0.0 { lx } else { (a * lx).exp_m1() / a };
    // tail: Σ_{k≥1} (-1)^k x^{a+k} / (k! (a+k))
    let xa = (a * lx).exp();
    let mut pw = 1.0;
    let mut tail = 0.0;
    for k in 1..200 {
        pw *= -x / k as f64;
        let t = pw / (a + k as f64);
        tail += t;
        if t.abs() < 1e-17 * tail.abs().max(1e-300) {
            break;
        }
    }
    head - xa * tail
}

/// Scaled upper incomplete gamma R(a,x) = Γ(a,x) x^{-a} e^{x}, x > 0, any real a.
pub fn upper_gamma_scaled(a: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || a.is_nan() {
        return domain("upper_gamma", format!("requires x > 0, got a={a}, x={x}"));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x >= (a + 1.0).max(1.5) {
        return upper_cf(a, x);
    }
    if a >= 0.5 {
        let q = 1.0 - (a * x.ln() - x - ln_gamma_unchecked(a)).exp() * lower_series(a, x)?;
        return Ok(q * (ln_gamma_unchecked(a) - a * x.ln() + x).exp());
    }
    // a < 0.5, x < 1.5: start at a0 in [-0.5, 0.5) and recur downwards
    let steps = if a < -0.5 { (-0.5 - a).ceil() as usize } else { 0 };
    let a0 = a + steps as f64;
    let g0 = upper_near_zero(a0, x);
    let mut r = g0 * (x - a0 * x.ln()).exp();
    let mut ak = a0;
    for _ in 0..steps {
        ak -= 1.0;
        r = (x * r - 1.0) / ak;
    }
    Ok(r)
}

/// Upper incomplete gamma Γ(a,x) for x > 0 and any real a; x = 0 allowed when a > 0.
pub fn upper_gamma(a: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        if a > 0.0 {
            return Ok(gamma_unchecked(a));
        }
        return domain("upper_gamma", format!("Γ({a}, 0) diverges"));
    }
    let r = upper_gamma_scaled(a, x)?;
    Ok(r * (a * x.ln() - x).exp())
}

/// Lower incomplete gamma γ(a,x), a > 0, x ≥ 0.
pub fn lower_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) {
        return domain("lower_gamma", format!("requires a > 0, got {a}"));
    }
    Ok(gamma_unchecked(a) * reg_lower_gamma(a, x)?)
}

/// Regularised lower incomplete gamma P(a,x), a > 0.
pub fn reg_lower_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x >= 0.0) {
        return domain("reg_lower_gamma", format!("requires a > 0, x ≥ 0; got a={a}, x={x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(1.0);
    }
    if x < a + 1.0 {
        Ok((a * x.ln() - x - ln_gamma_unchecked(a)).exp() * lower_series(a, x)?)
    } else {
        Ok(1.0 - reg_upper_gamma(a, x)?)
    }
}

/// Regularised upper incomplete gamma Q(a,x), a > 0.
pub fn reg_upper_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x >= 0.0) {
        return domain("reg_upper_gamma", format!("requires a > 0, x ≥ 0; got a={a}, x={x}"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        Ok(1.0 - reg_lower_gamma(a, x)?)
    } else {
        Ok((a * x.ln() - x - ln_gamma_unchecked(a)).exp() * upper_cf(a, x)?)
    }
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x == 0.0 || x.is_nan() {
        return x;
    }
    let p = reg_lower_gamma(0.5, x * x).unwrap_or(1.0);
    p.copysign(x)
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x < 0.5 {
        return 1.0 - erf(x);
    }
    reg_upper_gamma(0.5, x * x).unwrap_or(0.0)
}
