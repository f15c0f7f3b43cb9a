use num_complex::Complex64;
use rayon::prelude::*;

use super::{count_rectangle, Method, Rect, ScanConfig, Target, ZeroKind, ZeroRecord};
use crate::constant_term::phi;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Interior sample count for the real window.
pub const REAL_SAMPLES: usize = 64;
/// Offset of the first sample from the centre.
const LEFT_PROBE: f64 = 1e-6;

fn phi_real(field: FieldSpec, a: f64, x: f64) -> Result<f64> {
    Ok(phi(field, a, Complex64::new(x, 0.0))?.re)
}

/// The real zero of `φ` inside the real window, if there is one.
///
/// The window is sampled just right of the centre, at [`REAL_SAMPLES`]
/// interior points, and at its right end, where `φ` tends to `−∞`. A single
/// sign change is refined by bisection. Without a sign change the window
/// strip is checked to be zero-free by an argument-principle count.
pub fn find_real_zero(field: FieldSpec, a: f64, config: &ScanConfig) -> Result<Option<ZeroRecord>> {
    let target = Target::field(field, a)?;
    config.validate()?;
    let (lo, hi) = field.real_window();
    let width = hi - lo;
    let mut xs = vec![lo + LEFT_PROBE];
    xs.extend((1..=REAL_SAMPLES).map(|k| lo + width * k as f64 / (REAL_SAMPLES + 1) as f64));
    let mut vals = xs
        .par_iter()
        .map(|&x| phi_real(field, a, x))
        .collect::<Result<Vec<f64>>>()?;
    // φ → −∞ at the right end of the window
    xs.push(hi);
    vals.push(-1.0);

    let changes: Vec<usize> = (0..xs.len() - 1)
        .filter(|&k| (vals[k] < 0.0) != (vals[k + 1] < 0.0))
        .collect();
    match changes.len() {
        0 => {
            let strip = Rect::new(lo + 0.02, hi - 0.01, -0.25, 0.25)?;
            let n = count_rectangle(&target, &strip, config)?;
            if n != 0 {
                return Err(Error::AmbiguousBracket { count: n });
            }
            Ok(None)
        }
        1 => {
            let k = changes[0];
            let (mut l, mut r, fl) = (xs[k], xs[k + 1], vals[k]);
            loop {
                // near the pole the zero can sit very close to the end
                let tol = config.refine_tol.min(1e-4 * (hi - l));
                if r - l < 2.0 * tol {
                    break;
                }
                let m = 0.5 * (l + r);
                if m <= l || m >= r {
                    break;
                }
                let fm = phi_real(field, a, m)?;
                if fm == 0.0 {
                    l = m;
                    r = m;
                    break;
                }
                if (fm < 0.0) == (fl < 0.0) {
                    l = m;
                } else {
                    r = m;
                }
            }
            let rho = 0.5 * (l + r);
            Ok(Some(target.record(ZeroKind::Real, Complex64::new(rho, 0.0), Method::Bisection)?))
        }
        n => Err(Error::AmbiguousBracket { count: n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_threshold_cases() {
        let cfg = ScanConfig::default();
        assert!(find_real_zero(FieldSpec::Rational, 2.0, &cfg).unwrap().is_none());
        let z = find_real_zero(FieldSpec::Rational, 10.0, &cfg).unwrap().unwrap();
        assert!(z.re > 0.5 && z.re < 1.0 && z.im == 0.0);
        assert!(z.residual < cfg.residual_tol);
        assert!(z.mu > 0.0 && z.mu < 0.25);
        // mirror zero
        let m = phi(FieldSpec::Rational, 10.0, Complex64::new(1.0 - z.re, 0.0)).unwrap();
        let p = Target::field(FieldSpec::Rational, 10.0).unwrap();
        assert!(m.norm() / p.scale(Complex64::new(1.0 - z.re, 0.0)).unwrap() < 10.0 * cfg.residual_tol);
    }

    #[test]
    fn gaussian_threshold_cases() {
        let cfg = ScanConfig::default();
        let k = FieldSpec::ImaginaryQuadratic(1);
        assert!(find_real_zero(k, 2.0, &cfg).unwrap().is_none());
        let z = find_real_zero(k, 5.0, &cfg).unwrap().unwrap();
        assert!(z.re > 1.0 && z.re < 2.0);
    }

    #[test]
    fn rejects_small_heights() {
        assert!(find_real_zero(FieldSpec::Rational, 0.5, &ScanConfig::default()).is_err());
    }
}
