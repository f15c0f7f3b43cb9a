//! Hurwitz zeta by Euler–Maclaurin summation.
//!
//! The truncation point `N` and the number of Bernoulli corrections `M` are
//! picked from `|s|`, then the remainder bound
//! `|R_M| <= |T_{M+1}| |s + 2M + 1| / (Re s + 2M + 1)` is checked against the
//! tolerance. If the bound is not met, `N` is doubled and the sum redone.

use num_complex::Complex64;

use super::bernoulli::B2K_OVER_FACT;
use crate::error::{finite, Error, Result};

/// Relative target for the Euler–Maclaurin remainder.
const TAIL_TOL: f64 = 1e-16;

/// `ζ(s, q) = Σ_{n≥0} (n + q)^{-s}`, continued to `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, q: f64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            at: s,
        });
    }
    summed(s, q, false)
}

/// `ζ(s, q) − 1/(s − 1)`, finite at `s = 1` (where it equals `−ψ(q)`).
///
/// Character sums `Σ χ(r) ζ(s, r/m)` with `Σ χ(r) = 0` can use this form to
/// pass through `s = 1` without cancellation.
pub(crate) fn hurwitz_zeta_regular(s: Complex64, q: f64) -> Result<Complex64> {
    summed(s, q, true)
}

fn summed(s: Complex64, q: f64, regular: bool) -> Result<Complex64> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::Domain(format!("Hurwitz parameter q = {q} outside (0, 1]")));
    }
    let mut n = (s.norm() / 2.0).ceil() as usize + 10;
    loop {
        if let Some(v) = euler_maclaurin(s, q, n, regular) {
            return finite("hurwitz_zeta", s, v);
        }
        n *= 2;
        if n > 1 << 22 {
            return Err(Error::Unsupported(format!(
                "Euler–Maclaurin tail bound not reached for s = {s}"
            )));
        }
    }
}

/// Riemann zeta, `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

// (x^{1−s} − 1)/(s − 1) = −ln x · (e^u − 1)/u with u = (1 − s) ln x
fn regular_pole_term(s: Complex64, ln_x: f64) -> Complex64 {
    let u = (1.0 - s) * ln_x;
    let ratio = if u.norm() < 1e-3 {
        1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u / 120.0)))
    } else {
        (u.exp() - 1.0) / u
    };
    -ln_x * ratio
}

fn euler_maclaurin(s: Complex64, q: f64, n: usize, regular: bool) -> Option<Complex64> {
    let mut head = Complex64::new(0.0, 0.0);
    // Summed from the small terms upward for Re s > 0.
    for k in (0..n).rev() {
        head += (-s * (k as f64 + q).ln()).exp();
    }
    let x = n as f64 + q;
    let ln_x = x.ln();
    let x_pow = (-s * ln_x).exp(); // x^{-s}
    let pole = if regular {
        regular_pole_term(s, ln_x)
    } else {
        x_pow * x / (s - 1.0)
    };
    let mut acc = head + pole + 0.5 * x_pow;
    let scale = acc.norm().max(head.norm()).max(f64::MIN_POSITIVE);

    // term_k = B_{2k}/(2k)! * (s)_{2k-1} * x^{-s-2k+1}
    let inv_x2 = 1.0 / (x * x);
    let mut rising = s; // (s)_{1}
    let mut pow = x_pow / x; // x^{-s-1}
    for (k, coeff) in B2K_OVER_FACT.iter().enumerate() {
        let term = rising * pow * *coeff;
        acc += term;
        let m = 2.0 * (k as f64 + 1.0);
        // advance to (s)_{2k+1} and x^{-s-2k-1}
        rising *= (s + (m - 1.0)) * (s + m);
        pow *= inv_x2;
        if k + 1 < B2K_OVER_FACT.len() {
            let next = (rising * pow * B2K_OVER_FACT[k + 1]).norm();
            let denom = s.re + m + 1.0;
            if denom > 0.0 {
                let bound = next * (s + m + 1.0).norm() / denom;
                if bound < TAIL_TOL * scale {
                    return Some(acc);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn riemann_special_values() {
        let z2 = riemann_zeta(c(2.0, 0.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-15);
        let z0 = riemann_zeta(c(0.0, 0.0)).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-15);
        let zm1 = riemann_zeta(c(-1.0, 0.0)).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-15);
        // ζ(4) = π⁴/90
        let z4 = riemann_zeta(c(4.0, 0.0)).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() < 1e-15);
    }

    #[test]
    fn half_shift() {
        // ζ(2, 1/2) = 3ζ(2) = π²/2
        let v = hurwitz_zeta(c(2.0, 0.0), 0.5).unwrap();
        assert!((v.re - PI * PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn first_zero_of_zeta() {
        // ρ₁ = 1/2 + 14.134725141734693790457251983562 i
        let v = riemann_zeta(c(0.5, 14.134_725_141_734_694)).unwrap();
        assert!(v.norm() < 1e-13, "{v}");
    }

    #[test]
    fn large_imaginary_part() {
        // mpmath: zeta(0.5+100j)
        let v = riemann_zeta(c(0.5, 100.0)).unwrap();
        let want = c(2.692_619_885_681_324, -0.020_386_029_602_598_16);
        assert!((v - want).norm() < 1e-12, "{v}");
    }

    #[test]
    fn regular_part_at_one_is_minus_digamma() {
        // −ψ(1) = γ, −ψ(1/2) = γ + 2 ln 2
        let g = 0.577_215_664_901_532_9;
        let a = hurwitz_zeta_regular(c(1.0, 0.0), 1.0).unwrap();
        assert!((a.re - g).abs() < 1e-14);
        let b = hurwitz_zeta_regular(c(1.0, 0.0), 0.5).unwrap();
        assert!((b.re - g - 2.0 * 2f64.ln()).abs() < 1e-14);
        let s = c(1.3, 2.0);
        let d = hurwitz_zeta(s, 0.25).unwrap() - 1.0 / (s - 1.0) - hurwitz_zeta_regular(s, 0.25).unwrap();
        assert!(d.norm() < 1e-14);
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(riemann_zeta(c(1.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(hurwitz_zeta(c(2.0, 0.0), 0.0), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(c(2.0, 0.0), 1.5), Err(Error::Domain(_))));
    }
}
