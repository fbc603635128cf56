//! ∫_0^∞ γ^{s-1} Π h_i(c_i γ^{α_i/2}) dγ for the handful of factor shapes the
//! metrics need. One factor is a gamma ratio; two factors reduce to a single
//! Meijer G through Mellin–Parseval and Gauss multiplication; more factors
//! expand one entire factor as a power series over two-factor integrals.

use crate::error::{domain, eval_err, Error, Result};
use crate::specfun::{gamma_unchecked, ln_gamma_signed, meijer_g_log, MeijerOptions, MeijerSpec};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Kind {
    /// e^{-x}
    Exp,
    /// Γ(a, x)
    Upper(f64),
    /// γ(a, x)
    Lower(f64),
    /// 1/(1+x)
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Atom {
    pub kind: Kind,
    pub c: f64,
    /// x = c γ^{alpha/2}; alpha must be a positive integer.
    pub alpha: u32,
}

impl Atom {
    pub fn exp(c: f64, alpha: u32) -> Self {
        Self { kind: Kind::Exp, c, alpha }
    }
    pub fn upper(a: f64, c: f64, alpha: u32) -> Self {
        Self { kind: Kind::Upper(a), c, alpha }
    }
    pub fn lower(a: f64, c: f64, alpha: u32) -> Self {
        Self { kind: Kind::Lower(a), c, alpha }
    }
    pub fn rational() -> Self {
        Self { kind: Kind::Rational, c: 1.0, alpha: 2 }
    }
    fn kappa(&self) -> f64 {
        0.5 * self.alpha as f64
    }
    /// Gamma factors of the Mellin transform in t: (x, ε) stands for Γ(x + ε t).
    fn factors(&self) -> (Vec<(f64, i32)>, Vec<(f64, i32)>) {
        match self.kind {
            Kind::Exp => (vec![(0.0, 1)], vec![]),
            Kind::Upper(a) => (vec![(a, 1), (0.0, 1)], vec![(1.0, 1)]),
            Kind::Lower(a) => (vec![(a, 1), (0.0, -1)], vec![(1.0, -1)]),
            Kind::Rational => (vec![(0.0, 1), (1.0, -1)], vec![]),
        }
    }
}

/// Integral value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Val {
    pub value: f64,
    pub err: f64,
}

/// Integer α from a real one; refuses anything not within 1e-12 of an integer.
pub(crate) fn int_alpha(op: &'static str, alpha: f64) -> Result<u32> {
    let r = alpha.round();
    if (alpha - r).abs() > 1e-12 || r < 1.0 {
        return domain(op, format!("closed form needs integer α, got {alpha} (quadrature form applies)"));
    }
    Ok(r as u32)
}

pub(crate) fn integral(s: f64, atoms: &[Atom]) -> Result<Val> {
    scaled(s, atoms, 0.0)
}

/// e^{shift} times the integral, with the shift applied before exponentiating.
fn scaled(s: f64, atoms: &[Atom], shift: f64) -> Result<Val> {
    let atoms = merge(atoms);
    if atoms.iter().any(|a| !(a.c > 0.0) || !a.c.is_finite()) {
        return domain("mellin", format!("factor scales must be positive and finite: {atoms:?}"));
    }
    match atoms.len() {
        0 => domain("mellin", "empty product diverges"),
        1 => single(s, &atoms[0], shift),
        2 => pair(s, &atoms[0], &atoms[1], shift),
        _ => series(s, &atoms, shift),
    }
}

fn merge(atoms: &[Atom]) -> Vec<Atom> {
    let mut out: Vec<Atom> = Vec::new();
    for a in atoms {
        if a.kind == Kind::Exp {
            if let Some(b) = out.iter_mut().find(|b| b.kind == Kind::Exp && b.alpha == a.alpha) {
                b.c += a.c;
                continue;
            }
        }
        out.push(*a);
    }
    out
}

fn single(s: f64, a: &Atom, shift: f64) -> Result<Val> {
    let k = a.kappa();
    let t = s / k;
    let ln_pre = shift - k.ln() - t * a.c.ln();
    let (lv, sign) = match a.kind {
        Kind::Exp if t > 0.0 => (ln_gamma_signed(t).0, 1.0),
        Kind::Upper(b) if t > 0.0 && t + b > 0.0 => (ln_gamma_signed(t + b).0 - t.ln(), 1.0),
        Kind::Lower(b) if t < 0.0 && t + b > 0.0 => (ln_gamma_signed(t + b).0 - (-t).ln(), 1.0),
        Kind::Rational if t > 0.0 && t < 1.0 => ((PI / (PI * t).sin()).ln(), 1.0),
        _ => return domain("mellin", format!("integral diverges for s={s} with {a:?}")),
    };
    let v = sign * (ln_pre + lv).exp();
    if !v.is_finite() {
        return eval_err("mellin", format!("value overflows for s={s} with {a:?}"));
    }
    Ok(Val { value: v, err: v.abs() * 1e-14 })
}

#[derive(Default)]
struct Builder {
    an: Vec<f64>,
    ap: Vec<f64>,
    bm: Vec<f64>,
    bq: Vec<f64>,
    ln_pre: f64,
    ln_z: f64,
}

impl Builder {
    /// Γ(x + kσ) (k > 0) or Γ(x - |k|σ) (k < 0), in numerator or denominator.
    fn push(&mut self, x: f64, k: i32, num: bool) {
        let m = k.unsigned_abs() as f64;
        let pre = 0.5 * (1.0 - m) * (2.0 * PI).ln() + (x - 0.5) * m.ln();
        let zf = m * m.ln();
        let sgn = if num { 1.0 } else { -1.0 };
        self.ln_pre += sgn * pre;
        self.ln_z += sgn * if k > 0 { zf } else { -zf };
        for j in 0..k.unsigned_abs() {
            let y = (x + j as f64) / m;
            match (k > 0, num) {
                (true, true) => self.an.push(1.0 - y),
                (false, true) => self.bm.push(y),
                (true, false) => self.bq.push(1.0 - y),
                (false, false) => self.ap.push(y),
            }
        }
    }

    fn finish(mut self) -> (MeijerSpec, f64, f64) {
        cancel(&mut self.an, &mut self.bq);
        cancel(&mut self.bm, &mut self.ap);
        let (m, n) = (self.bm.len(), self.an.len());
        let mut a = self.an;
        a.extend(self.ap);
        let mut b = self.bm;
        b.extend(self.bq);
        (MeijerSpec::new(m, n, a, b), self.ln_z, self.ln_pre)
    }
}

fn cancel(x: &mut Vec<f64>, y: &mut Vec<f64>) {
    let mut i = 0;
    while i < x.len() {
        if let Some(j) = y.iter().position(|v| (v - x[i]).abs() < 1e-14) {
            y.remove(j);
            x.remove(i);
        } else {
            i += 1;
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Meijer-G reduction of a two-factor integral.
pub(crate) fn pair_spec(s: f64, a: &Atom, b: &Atom) -> (MeijerSpec, f64, f64) {
    let l = a.alpha / gcd(a.alpha, b.alpha) * b.alpha;
    let (ma, mb) = ((l / a.alpha) as i32, (l / b.alpha) as i32);
    let tb = s / b.kappa();
    let mut bld = Builder {
        ln_pre: (l as f64 / (2.0 * a.kappa() * b.kappa())).ln() - tb * b.c.ln(),
        ln_z: -(ma as f64) * a.c.ln() + mb as f64 * b.c.ln(),
        ..Default::default()
    };
    let (na, da) = a.factors();
    for (x, e) in na {
        bld.push(x, e * ma, true);
    }
    for (x, e) in da {
        bld.push(x, e * ma, false);
    }
    let (nb, db) = b.factors();
    for (x, e) in nb {
        bld.push(x + e as f64 * tb, -e * mb, true);
    }
    for (x, e) in db {
        bld.push(x + e as f64 * tb, -e * mb, false);
    }
    bld.finish()
}

fn pair(s: f64, a: &Atom, b: &Atom, shift: f64) -> Result<Val> {
    let (spec, ln_z, ln_pre) = pair_spec(s, a, b);
    let (v, e) = meijer_g_log(&spec, ln_z, ln_pre + shift, &MeijerOptions::default()).map_err(|err| match err {
        Error::Evaluation { msg, .. } => Error::Evaluation { op: "mellin", msg: format!("{msg} (s={s}, {a:?}, {b:?})") },
        other => other,
    })?;
    Ok(Val { value: v, err: e })
}

/// Power-series term j of an entire factor as (sign, ln|coef|, power).
fn series_term(kind: Kind, j: usize) -> (f64, f64, f64) {
    let jf = j as f64;
    let ln_fact = ln_gamma_signed(jf + 1.0).0;
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    match kind {
        Kind::Exp => (sign, -ln_fact, jf),
        Kind::Lower(a) => (sign, -ln_fact - (a + jf).ln(), a + jf),
        _ => unreachable!(),
    }
}

fn series(s: f64, atoms: &[Atom], shift: f64) -> Result<Val> {
    // expand E against an exponentially decaying factor D; convergent when E
    // grows more slowly than D decays, asymptotic (optimally truncated) otherwise
    let mut conv: Vec<(f64, usize)> = Vec::new();
    let mut asym: Vec<(f64, usize)> = Vec::new();
    for (i, e) in atoms.iter().enumerate() {
        if !matches!(e.kind, Kind::Exp | Kind::Lower(_)) {
            continue;
        }
        for (j, d) in atoms.iter().enumerate() {
            if i == j || !matches!(d.kind, Kind::Exp | Kind::Upper(_)) {
                continue;
            }
            let (ke, kd) = (e.kappa(), d.kappa());
            let score = e.c * d.c.powf(-ke / kd);
            if ke > kd {
                asym.push((score, i));
            } else if ke < kd || e.c < d.c {
                // the alternating series loses about e^{2·score} in cancellation
                if score <= 9.0 {
                    conv.push((score, i));
                }
            }
        }
    }
    for c in [&mut conv, &mut asym] {
        c.sort_by(|x, y| x.0.total_cmp(&y.0));
        c.dedup_by_key(|c| c.1);
    }
    let mut last = None;
    let tries = conv.iter().map(|c| (c.1, false)).chain(asym.iter().map(|c| (c.1, true)));
    for (i, asymptotic) in tries {
        match expand(s, atoms, i, shift, asymptotic) {
            Ok(v) => return Ok(v),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Evaluation {
        op: "mellin",
        msg: format!("no convergent series reduction for {} factors (quadrature form applies)", atoms.len()),
    }))
}

fn expand(s: f64, atoms: &[Atom], i: usize, shift: f64, asymptotic: bool) -> Result<Val> {
    let e = atoms[i];
    let rest: Vec<Atom> = atoms.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, a)| *a).collect();
    let k = e.kappa();
    let (mut sum, mut err, mut peak) = (0.0f64, 0.0f64, 0.0f64);
    let mut prev = f64::INFINITY;
    let mut small = 0;
    for j in 0..4000 {
        let (sign, ln_coef, pw) = series_term(e.kind, j);
        let v = scaled(s + k * pw, &rest, shift + ln_coef + pw * e.c.ln())?;
        let t = sign * v.value;
        if asymptotic && t.abs() > prev && j > 1 {
            // past the smallest term; it bounds the truncation error
            if prev > 1e-10 * sum.abs() {
                return eval_err("mellin", format!("asymptotic series in {e:?} stalls at {:e} relative", prev / sum.abs()));
            }
            return Ok(Val { value: sum, err: err + prev });
        }
        prev = t.abs();
        sum += t;
        err += v.err;
        peak = peak.max(t.abs());
        if t.abs() <= 1e-17 * sum.abs() || t == 0.0 {
            small += 1;
            if small >= 3 {
                let cancel = peak * 1e-16 * (j as f64 + 1.0);
                if cancel > 1e-8 * sum.abs() {
                    return eval_err("mellin", format!("series expanding {e:?} lost precision (peak {peak:e}, sum {sum:e})"));
                }
                return Ok(Val { value: sum, err: err + cancel });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Convergence { op: "mellin", msg: format!("series expanding {e:?} did not settle in 4000 terms") })
}

/// Γ(a) guarded away from its poles.
pub(crate) fn gamma_safe(a: f64) -> f64 {
    gamma_unchecked(nudge(a))
}

/// Moves a non-positive integer off the pole by a relative 1e-7.
pub(crate) fn nudge(a: f64) -> f64 {
    if a <= 0.0 && (a - a.round()).abs() < 1e-9 {
        a + 1e-7 * a.abs().max(1.0)
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_positive, QuadOptions};
    use crate::specfun::{lower_gamma, upper_gamma};

    fn eval(a: &Atom, g: f64) -> f64 {
        let x = a.c * g.powf(a.kappa());
        match a.kind {
            Kind::Exp => (-x).exp(),
            Kind::Upper(p) => upper_gamma(p, x).unwrap(),
            Kind::Lower(p) => lower_gamma(p, x).unwrap(),
            Kind::Rational => 1.0 / (1.0 + x),
        }
    }

    fn quad(s: f64, atoms: &[Atom]) -> f64 {
        let f = |g: f64| g.powf(s - 1.0) * atoms.iter().map(|a| eval(a, g)).product::<f64>();
        let scales: Vec<f64> = atoms.iter().map(|a| a.c.powf(-1.0 / a.kappa())).collect();
        integrate_positive(&f, &scales, &QuadOptions::default()).unwrap().value
    }

    fn check(s: f64, atoms: &[Atom]) {
        let v = integral(s, atoms).unwrap().value;
        let q = quad(s, atoms);
        assert!(((v - q) / q).abs() < 1e-8, "s={s} {atoms:?}: {v} vs {q}");
    }

    #[test]
    fn pairs_match_quadrature() {
        check(1.3, &[Atom::exp(0.7, 2), Atom::lower(1.5, 2.0, 3)]);
        check(2.1, &[Atom::upper(-0.4, 1.3, 2), Atom::lower(2.0, 0.5, 1)]);
        check(0.8, &[Atom::rational(), Atom::upper(1.7, 0.9, 4)]);
        check(1.0, &[Atom::rational(), Atom::exp(0.05, 1)]);
        check(4.6, &[Atom::upper(-3.2, 30.0, 2), Atom::exp(0.2, 2)]);
    }

    #[test]
    fn three_factors_by_series() {
        check(1.0, &[Atom::rational(), Atom::exp(0.3, 2), Atom::exp(0.02, 3)]);
        check(1.4, &[Atom::exp(1.0, 2), Atom::lower(1.0, 0.1, 2), Atom::upper(0.6, 0.8, 2)]);
        check(2.5, &[Atom::rational(), Atom::upper(-1.3, 2.0, 2), Atom::exp(0.4, 2)]);
    }
}
