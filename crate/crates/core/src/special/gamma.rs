//! Complex log-gamma by upward recurrence plus a fixed Stirling series.

use num_complex::Complex64;

use super::bernoulli::B2K;
use crate::error::{finite, Error, Result};

/// Real part threshold above which the Stirling series is applied directly.
const STIRLING_MIN_RE: f64 = 12.0;

/// `0.5 * ln(2π)`.
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Logarithm of the gamma function.
///
/// The branch is the analytic continuation from the positive real axis
/// through the upper (resp. lower) half-plane, so `Im log_gamma(x ± i0)`
/// jumps by multiples of `π` across the negative real axis. On the negative
/// real axis the limit from below is returned. This matches the usual
/// `loggamma` convention.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole {
            function: "log_gamma",
            at: s,
        });
    }
    let v = if s.im < 0.0 || (s.im == 0.0 && s.re < 0.0) {
        log_gamma_upper(s.conj()).conj()
    } else {
        log_gamma_upper(s)
    };
    finite("log_gamma", s, v)
}

/// `Γ(s)` as `exp(log_gamma(s))`.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(log_gamma(s)?.exp())
}

// Im z >= 0. Shifting by principal logs keeps the branch continuous
// because every z + k stays in the closed upper half-plane.
fn log_gamma_upper(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_MIN_RE {
        shift += w.ln();
        w += 1.0;
    }
    stirling(w) - shift
}

fn stirling(w: Complex64) -> Complex64 {
    let ln_w = w.ln();
    let mut acc = (w - 0.5) * ln_w - w + HALF_LN_2PI;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for (k, b) in B2K.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        acc += pow * (b / (n * (n - 1.0)));
        pow *= inv2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn known_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14, "{}", half.re - 0.5 * PI.ln());
        assert_eq!(half.im, 0.0);
        // Γ(1/4) = 3.625609908221908311930685155867672002995...
        let q = gamma(c(0.25, 0.0)).unwrap();
        assert!((q.re / 3.625_609_908_221_908 - 1.0).abs() < 1e-14);
        // 10! = 3628800
        let f = gamma(c(11.0, 0.0)).unwrap();
        assert!((f.re / 3_628_800.0 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn branch_matches_loggamma_convention() {
        // mpmath.loggamma values.
        let cases = [
            (c(-0.5, 0.0), c(1.265_512_123_484_645_4, -PI)),
            (c(-2.5, 0.0), c(-0.056_243_716_497_674_05, -3.0 * PI)),
            (c(3.0, 200.0), c(-299.994_470_912_060_64, 863.575_047_834_560_1)),
            (c(-3.0, 200.0), c(-331.784_612_593_382_35, 854.135_270_998_638_8)),
        ];
        for (z, want) in cases {
            let got = log_gamma(z).unwrap();
            assert!((got - want).norm() / want.norm() < 1e-13, "{z}: {got} vs {want}");
        }
    }

    #[test]
    fn poles() {
        for k in 0..5 {
            assert!(matches!(
                log_gamma(c(-(k as f64), 0.0)),
                Err(Error::Pole { .. })
            ));
        }
    }

    #[test]
    fn reflection() {
        for &(x, y) in &[(0.3, 0.0), (0.2, 1.5), (-1.7, 3.0), (0.5, 20.0), (2.25, -7.5)] {
            let s = c(x, y);
            let lhs = gamma(s).unwrap() * gamma(1.0 - s).unwrap();
            let rhs = PI / (s * PI).sin();
            assert!((lhs - rhs).norm() / rhs.norm() < 1e-11, "{s}");
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let s = c(0.7, 13.0);
        let a = log_gamma(s).unwrap();
        let b = log_gamma(s.conj()).unwrap();
        assert!((a - b.conj()).norm() < 1e-13);
    }
}
