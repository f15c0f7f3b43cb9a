use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite, Error, Result};

const TRUNCATION: f64 = 1e-17;

fn check_upper(tau: Complex64) -> Result<()> {
    if tau.im > 0.0 && tau.re.is_finite() && tau.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("eta needs Im τ > 0, got {tau}")))
    }
}

/// Dedekind eta `η(τ) = q^{1/24} Π_{n≥1} (1 − qⁿ)` with `q = e^{2πiτ}`.
pub fn dedekind_eta(tau: Complex64) -> Result<Complex64> {
    check_upper(tau)?;
    let i = Complex64::i();
    let q = (2.0 * PI * i * tau).exp();
    let mut qn = q;
    let mut prod = Complex64::new(1.0, 0.0);
    while qn.norm() >= TRUNCATION {
        prod *= 1.0 - qn;
        qn *= q;
    }
    finite("dedekind_eta", tau, (PI * i * tau / 12.0).exp() * prod)
}

/// Eta through the pentagonal-number series
/// `q^{1/24} Σ_k (−1)^k q^{k(3k−1)/2}`; used as a check on the product.
pub fn dedekind_eta_series(tau: Complex64) -> Result<Complex64> {
    check_upper(tau)?;
    let i = Complex64::i();
    let two_pi_i_tau = 2.0 * PI * i * tau;
    let mut acc = Complex64::new(1.0, 0.0);
    let mut k: i64 = 1;
    loop {
        let mut grew = false;
        for kk in [k, -k] {
            let e = (kk * (3 * kk - 1) / 2) as f64;
            let term = (two_pi_i_tau * e).exp();
            if term.norm() >= TRUNCATION {
                grew = true;
            }
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if !grew {
            break;
        }
        k += 1;
    }
    finite("dedekind_eta_series", tau, (PI * i * tau / 12.0).exp() * acc)
}
