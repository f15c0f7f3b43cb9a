use num_complex::Complex64;

use super::hurwitz::hurwitz_zeta_regular;
use super::kronecker::kronecker_symbol;
use crate::error::{Error, Result};

/// The real primitive character `χ_d(n) = (d/n)` attached to a negative
/// fundamental discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticCharacter {
    discriminant: i64,
    values: Vec<i8>,
}

impl QuadraticCharacter {
    pub fn new(discriminant: i64) -> Result<Self> {
        if !is_negative_fundamental(discriminant) {
            return Err(Error::Domain(format!(
                "{discriminant} is not a negative fundamental discriminant"
            )));
        }
        let m = discriminant.unsigned_abs();
        let values = (1..=m).map(|n| kronecker_symbol(discriminant, n)).collect();
        Ok(Self {
            discriminant,
            values,
        })
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn modulus(&self) -> u64 {
        self.discriminant.unsigned_abs()
    }

    /// `χ(n)` for `n >= 1`.
    pub fn value(&self, n: u64) -> i8 {
        assert!(n > 0);
        self.values[((n - 1) % self.modulus()) as usize]
    }
}

fn squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

fn is_negative_fundamental(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    let m = d.unsigned_abs();
    match d.rem_euclid(4) {
        1 => squarefree(m),
        0 => {
            let q = m / 4;
            // -q ≡ 2, 3 (mod 4)
            matches!((-(q as i64)).rem_euclid(4), 2 | 3) && squarefree(q)
        }
        _ => false,
    }
}

/// `L(s, χ) = |d|^{-s} Σ_{r=1}^{|d|} χ(r) ζ(s, r/|d|)`.
///
/// The `1/(s−1)` parts of the Hurwitz values cancel in the character sum, so
/// their regular parts are summed instead; `L` is then entire as it should be.
pub fn dirichlet_l(s: Complex64, chi: &QuadraticCharacter) -> Result<Complex64> {
    let m = chi.modulus();
    let mf = m as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 1..=m {
        let x = chi.value(r);
        if x == 0 {
            continue;
        }
        let h = hurwitz_zeta_regular(s, r as f64 / mf)?;
        if x > 0 {
            acc += h;
        } else {
            acc -= h;
        }
    }
    Ok(acc * (-s * mf.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, -11, -19, -43, -67, -163, -15, -20, -24] {
            assert!(QuadraticCharacter::new(d).is_ok(), "{d}");
        }
        for d in [-1, -2, -12, -16, -27, -5, 5, 0] {
            assert!(QuadraticCharacter::new(d).is_err(), "{d}");
        }
    }

    // Direct partial sums of the alternating series with an averaged tail.
    fn leibniz_oracle(s: f64) -> f64 {
        let mut acc = 0.0;
        let mut prev = 0.0;
        let n = 2_000_000u64;
        for k in 0..n {
            prev = acc;
            let t = 1.0 / ((2 * k + 1) as f64).powf(s);
            acc += if k % 2 == 0 { t } else { -t };
        }
        0.5 * (acc + prev)
    }

    #[test]
    fn conductor_four_values() {
        let chi = QuadraticCharacter::new(-4).unwrap();
        let l1 = dirichlet_l(c(1.0, 0.0), &chi).unwrap();
        assert!((l1.re - PI / 4.0).abs() < 1e-13);
        assert!((l1.re - leibniz_oracle(1.0)).abs() < 1e-9);
        let l2 = dirichlet_l(c(2.0, 0.0), &chi).unwrap();
        assert!((l2.re - 0.915_965_594_177_219).abs() < 1e-14);
        assert!((l2.re - leibniz_oracle(2.0)).abs() < 1e-12);
    }

    #[test]
    fn class_number_formula_at_one() {
        // L(1, χ_d) = π h / (w... ) : for h = 1, L(1,χ_d) = 2π / (w sqrt|d|)
        for (d, w) in [(-3i64, 6.0), (-4, 4.0), (-7, 2.0), (-8, 2.0), (-163, 2.0)] {
            let chi = QuadraticCharacter::new(d).unwrap();
            let l1 = dirichlet_l(c(1.0, 0.0), &chi).unwrap();
            let want = 2.0 * PI / (w * (d.abs() as f64).sqrt());
            assert!((l1.re - want).abs() < 1e-12, "d = {d}: {l1}");
        }
    }

    #[test]
    fn schwarz_reflection() {
        let chi = QuadraticCharacter::new(-7).unwrap();
        for &(x, y) in &[(0.5, 3.0), (1.2, 17.5), (-0.3, 40.0), (2.0, 99.0)] {
            let s = c(x, y);
            let a = dirichlet_l(s, &chi).unwrap();
            let b = dirichlet_l(s.conj(), &chi).unwrap();
            assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1.0));
        }
    }
}
