use crate::error::{domain, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn is_nonpositive_int(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (z - 1)
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    s
}

/// Γ(x) for real x. Poles at the non-positive integers are a domain error.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() {
        return domain("gamma", "NaN argument");
    }
    if is_nonpositive_int(x) {
        return domain("gamma", format!("pole at x = {x}"));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // reflection; sin(pi x) computed from the reduced argument
        return PI / (sin_pi(x) * gamma_unchecked(1.0 - x));
    }
    if x == x.floor() && x <= 171.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return f;
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let h = t.powf((z + 0.5) / 2.0);
    (2.0 * PI).sqrt() * h * (-t).exp() * h * lanczos_sum(z)
}

/// sin(πx) with exact zeros at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    (PI * r).sin()
}

/// ln|Γ(x)| for real x.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_int(x) || x.is_nan() {
        return domain("ln_gamma", format!("pole at x = {x}"));
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return PI.ln() - sin_pi(x).abs().ln() - ln_gamma_unchecked(1.0 - x);
    }
    if x < 15.0 {
        return gamma_unchecked(x).ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// Sign of Γ(x) (x not a pole).
pub(crate) fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if (x.floor() as i64) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Principal-sheet ln Γ(z) for complex z (imaginary part not branch-tracked;
/// intended for use under `exp`).
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && is_nonpositive_int(z.re) {
        return domain("ln_gamma", format!("pole at z = {z}"));
    }
    Ok(ln_gamma_c(z))
}

pub(crate) fn ln_gamma_c(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let w = Complex64::new(PI, 0.0) * z;
        return Complex64::new(PI.ln(), 0.0) - ln_sin(w) - ln_gamma_c(Complex64::new(1.0, 0.0) - z);
    }
    let zm = z - 1.0;
    let mut s = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += *c / (zm + i as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    HALF_LN_2PI + (zm + 0.5) * t.ln() - t + s.ln()
}

fn ln_sin(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    if w.im > 20.0 {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw})
        -i * w + (1.0 - (2.0 * i * w).exp()).ln() + Complex64::new(0.5f64.ln(), PI / 2.0)
    } else if w.im < -20.0 {
        // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
        i * w + (1.0 - (-2.0 * i * w).exp()).ln() + Complex64::new(0.5f64.ln(), -PI / 2.0)
    } else if w.im == 0.0 {
        Complex64::new(sin_pi(w.re / PI), 0.0).ln()
    } else {
        w.sin().ln()
    }
}

/// ψ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return domain("digamma", format!("requires x > 0, got {x}"));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    // Bernoulli-number tail
    let tail = x2
        * (1.0 / 12.0
            - x2 * (1.0 / 120.0
                - x2 * (1.0 / 252.0 - x2 * (1.0 / 240.0 - x2 * (1.0 / 132.0 - x2 * 691.0 / 32760.0)))));
    Ok(acc + x.ln() - 0.5 / x - tail)
}

/// (Γ(1+a) - 1) / a, accurate for small |a| (|a| < 0.5).
pub(crate) fn gamma1pm1_over_a(a: f64) -> f64 {
    if a.abs() < 1e-4 {
        let g = EULER_GAMMA;
        let c2 = g * g / 2.0 + PI * PI / 12.0;
        let zeta3 = 1.202_056_903_159_594_2;
        let c3 = -(g * g * g / 6.0 + g * PI * PI / 12.0 + zeta3 / 3.0);
        return -g + a * (c2 + a * c3);
    }
    (gamma_unchecked(1.0 + a) - 1.0) / a
}

/// Pochhammer-free product helper: ln|Γ(x)| with sign.
pub(crate) fn ln_gamma_signed(x: f64) -> (f64, f64) {
    (ln_gamma_unchecked(x), gamma_sign(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_integers_are_factorials() {
        assert_eq!(gamma_fn(5.0).unwrap(), 24.0);
        assert_eq!(gamma_fn(1.0).unwrap(), 1.0);
    }

    #[test]
    fn reflection_half() {
        let v = gamma_fn(-0.5).unwrap();
        assert!((v + 2.0 * PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn complex_matches_real() {
        for &x in &[0.3, 1.7, 4.3, 22.5, -2.5] {
            let c = ln_gamma_c(Complex64::new(x, 0.0)).exp().re;
            let r = gamma_unchecked(x);
            assert!(((c - r) / r).abs() < 1e-12, "{x}: {c} vs {r}");
        }
    }

    #[test]
    fn large_imaginary_magnitude() {
        // |Γ(1/2 + iy)|² = π / cosh(πy)
        let y = 40.0;
        let v = ln_gamma_c(Complex64::new(0.5, y)).re * 2.0;
        let want = PI.ln() - (PI * y).cosh().ln();
        assert!((v - want).abs() < 1e-10);
        let v = ln_gamma_c(Complex64::new(-3.5, -y)).re;
        let w = ln_gamma_c(Complex64::new(-3.5, y)).re;
        assert!((v - w).abs() < 1e-10);
    }
}
