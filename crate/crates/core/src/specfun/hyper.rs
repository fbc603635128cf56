//! Gauss hypergeometric function for real parameters and real z < 1.

use super::gamma::{digamma, gamma_unchecked, ln_gamma_signed};
use crate::error::{domain, Error, Result};

fn is_nonpos_int(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-14
}

fn near_int(x: f64) -> bool {
    (x - x.round()).abs() < 1e-9
}

/// Π Γ(num) / Π Γ(den) via logs; a pole in the denominator gives 0.
fn gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    let mut l = 0.0;
    let mut s = 1.0;
    for &x in den {
        if is_nonpos_int(x) {
            return 0.0;
        }
        let (lg, sg) = ln_gamma_signed(x);
        l -= lg;
        s *= sg;
    }
    for &x in num {
        if is_nonpos_int(x) {
            return f64::NAN;
        }
        let (lg, sg) = ln_gamma_signed(x);
        l += lg;
        s *= sg;
    }
    s * l.exp()
}

fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut comp = 0.0;
    for n in 0..200_000 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        if term == 0.0 {
            return Ok(sum);
        }
        // Kahan summation keeps alternating tails honest
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() < 1e-17 * sum.abs() && n > 2 {
            return Ok(sum);
        }
    }
    Err(Error::Convergence { op: "gauss_2f1 series", msg: format!("a={a}, b={b}, c={c}, z={z}") })
}

/// ₂F₁(a, b; c; z) for z < 1 (z = 1 when c - a - b > 0).
///
/// Uses the direct series for |z| ≤ 1/2 and the Pfaff, 1/z and 1-z
/// transformations elsewhere. Integer c - a - b near z = 1 uses the
/// logarithmic expansion; other degenerate cases perturb b symmetrically.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if [a, b, c, z].iter().any(|v| !v.is_finite()) {
        return domain("gauss_2f1", "non-finite input");
    }
    if is_nonpos_int(c) {
        return domain("gauss_2f1", format!("c = {c} is a non-positive integer; use regularized_2f1"));
    }
    if z > 1.0 {
        return domain("gauss_2f1", format!("requires z < 1, got {z}"));
    }
    if z == 1.0 {
        if c - a - b > 0.0 {
            return Ok(gamma_ratio(&[c, c - a - b], &[c - a, c - b]));
        }
        return domain("gauss_2f1", "diverges at z = 1 for c - a - b ≤ 0");
    }
    f21(a, b, c, z, 0)
}

fn f21(a: f64, b: f64, c: f64, z: f64, depth: u32) -> Result<f64> {
    if depth > 6 {
        return Err(Error::Convergence { op: "gauss_2f1", msg: "transformation recursion".into() });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if is_nonpos_int(a) || is_nonpos_int(b) || z.abs() <= 0.5 {
        return series(a, b, c, z);
    }
    if z < -1.0 {
        if near_int(a - b) {
            return perturbed(a, b, c, z, depth);
        }
        let w = 1.0 / z;
        let t1 = gamma_ratio(&[c, b - a], &[b, c - a]) * (-z).powf(-a) * f21(a, a - c + 1.0, a - b + 1.0, w, depth + 1)?;
        let t2 = gamma_ratio(&[c, a - b], &[a, c - b]) * (-z).powf(-b) * f21(b, b - c + 1.0, b - a + 1.0, w, depth + 1)?;
        return Ok(t1 + t2);
    }
    if z < 0.0 {
        // Pfaff: maps [-1, -1/2) into [1/3, 1/2)
        let w = z / (z - 1.0);
        return Ok((1.0 - z).powf(-a) * f21(a, c - b, c, w, depth + 1)?);
    }
    // 1/2 < z < 1
    let d = c - a - b;
    if near_int(d) {
        let m = d.round();
        if m < 0.0 {
            // Euler: (1-z)^{c-a-b} ₂F₁(c-a, c-b; c; z) has c - a' - b' = -m > 0
            return Ok((1.0 - z).powf(m) * f21(c - a, c - b, c, z, depth + 1)?);
        }
        if a > 0.0 && b > 0.0 {
            return log_case(a, b, m as usize, 1.0 - z);
        }
        return perturbed(a, b, c, z, depth);
    }
    let w = 1.0 - z;
    let t1 = gamma_ratio(&[c, d], &[c - a, c - b]) * f21(a, b, 1.0 - d, w, depth + 1)?;
    let t2 = gamma_ratio(&[c, -d], &[a, b]) * w.powf(d) * f21(c - a, c - b, d + 1.0, w, depth + 1)?;
    Ok(t1 + t2)
}

/// ₂F₁(a, b; a+b+m; 1-w) for integer m ≥ 0, a, b > 0 (logarithmic case).
fn log_case(a: f64, b: f64, m: usize, w: f64) -> Result<f64> {
    let mf = m as f64;
    let c = a + b + mf;
    let mut head = 0.0;
    if m > 0 {
        let mut t = 1.0;
        for n in 0..m {
            let nf = n as f64;
            head += t;
            t *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
        }
        head *= gamma_ratio(&[mf, c], &[a + mf, b + mf]);
    }
    let lw = w.ln();
    let mut psi = digamma(1.0)? + digamma(mf + 1.0)? - digamma(a + mf)? - digamma(b + mf)?;
    let mut t = 1.0 / gamma_unchecked(mf + 1.0);
    let mut sum = 0.0;
    for n in 0..10_000 {
        let nf = n as f64;
        let term = t * (lw - psi);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && n > 2 {
            let pre = gamma_ratio(&[c], &[a, b]) * w.powf(mf);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            return Ok(head - sign * pre * sum);
        }
        psi += 1.0 / (nf + 1.0) + 1.0 / (nf + mf + 1.0) - 1.0 / (a + mf + nf) - 1.0 / (b + mf + nf);
        t *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
    }
    Err(Error::Convergence { op: "gauss_2f1 log case", msg: format!("a={a}, b={b}, m={m}, 1-z={w}") })
}

fn perturbed(a: f64, b: f64, c: f64, z: f64, depth: u32) -> Result<f64> {
    let h = 1e-5 * b.abs().max(1.0);
    let up = f21(a, b + h, c, z, depth + 1)?;
    let dn = f21(a, b - h, c, z, depth + 1)?;
    Ok(0.5 * (up + dn))
}

/// ₂F₁(a, b; c; z) / Γ(c), finite at non-positive integer c.
pub fn regularized_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpos_int(c) {
        let m = (-c).round();
        // (a)_{m+1} (b)_{m+1} / (m+1)! z^{m+1} ₂F₁(a+m+1, b+m+1; m+2; z)
        let mut coef = 1.0;
        for k in 0..=(m as usize) {
            let kf = k as f64;
            coef *= (a + kf) * (b + kf) / (kf + 1.0) * z;
        }
        if coef == 0.0 {
            return Ok(0.0);
        }
        return Ok(coef * gauss_2f1(a + m + 1.0, b + m + 1.0, m + 2.0, z)?);
    }
    let g = gamma_unchecked(c);
    Ok(gauss_2f1(a, b, c, z)? / g)
}
