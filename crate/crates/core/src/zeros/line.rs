use num_complex::Complex64;
use rayon::prelude::*;

use super::{Method, ScanConfig, Target, ZeroKind, ZeroRecord};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::zeta::{lambda, lambda_k};

/// Smallest step the adaptive scanner will try.
pub const MIN_STEP: f64 = 1e-4;

/// Argument of the completed zeta function in the line function at `t`.
pub fn line_argument(field: FieldSpec, t: f64) -> Complex64 {
    match field {
        FieldSpec::Rational => Complex64::new(1.0, 2.0 * t),
        _ => Complex64::new(1.0, t),
    }
}

/// The line function with `Λ_K` supplied by the caller, e.g. from a cache.
pub fn line_value_with<L>(field: FieldSpec, a: f64, t: f64, lambda_fn: L) -> Result<f64>
where
    L: FnOnce(FieldSpec, Complex64) -> Result<Complex64>,
{
    let twist = Complex64::new(0.0, t * a.ln()).exp();
    Ok((lambda_fn(field, line_argument(field, t))? * twist).re)
}

pub(super) fn line_value(field: FieldSpec, a: f64, t: f64) -> Result<f64> {
    line_value_with(field, a, t, |f, s| if f.is_rational() { lambda(s) } else { lambda_k(f, s) })
}

/// `Re(Λ(1+2it) a^{it})` for `ℚ` and `Re(Λ_K(1+it) a^{it})` otherwise, so
/// that `φ` on the critical line is `2a^{1/2}` (resp. `2a`) times this value.
pub fn line_function(field: FieldSpec, a: f64, t: f64) -> Result<f64> {
    let cfg = ScanConfig::default();
    if t.abs() < cfg.exclusion_radius {
        return Err(Error::Domain(format!(
            "t = {t} lies within {} of the centre",
            cfg.exclusion_radius
        )));
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!("truncation height a = {a} must be positive")));
    }
    line_value(field, a, t)
}

fn bisect<F: Fn(f64) -> Result<f64>>(f: F, mut lo: f64, mut hi: f64, mut flo: f64, tol: f64) -> Result<f64> {
    while hi - lo >= 2.0 * tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Brackets every sign change of the line function on `[tMin, tMax]` at the
/// configured step and refines it by bisection. Records come back sorted by
/// `t`.
pub fn scan_line(target: &Target, config: &ScanConfig) -> Result<Vec<ZeroRecord>> {
    scan_line_with(target, config, |t| target.line_value(t))
}

/// [`scan_line`] with the line function supplied by the caller. It must
/// agree with [`Target::line_value`].
pub fn scan_line_with<F>(target: &Target, config: &ScanConfig, line: F) -> Result<Vec<ZeroRecord>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    config.validate()?;
    if config.t_max <= config.t_min {
        return Ok(Vec::new());
    }
    let n = ((config.t_max - config.t_min) / config.step).floor() as usize;
    let mut grid: Vec<f64> = (0..=n).map(|k| config.t_min + k as f64 * config.step).collect();
    if config.t_max - grid[n] > 1e-9 * config.step {
        grid.push(config.t_max);
    }
    let values = grid
        .par_iter()
        .map(|&t| line(t))
        .collect::<Result<Vec<f64>>>()?;

    let mut brackets = Vec::new();
    for k in 0..grid.len() {
        if values[k] == 0.0 {
            brackets.push((grid[k], grid[k], 0.0));
        } else if k + 1 < grid.len() && values[k + 1] != 0.0 && (values[k] < 0.0) != (values[k + 1] < 0.0) {
            brackets.push((grid[k], grid[k + 1], values[k]));
        }
    }

    let ts = brackets
        .par_iter()
        .map(|&(lo, hi, flo)| {
            if lo == hi {
                Ok(lo)
            } else {
                bisect(&line, lo, hi, flo, config.refine_tol)
            }
        })
        .collect::<Result<Vec<f64>>>()?;

    for w in ts.windows(2) {
        if w[1] - w[0] < 2.0 * config.step {
            return Err(Error::StepTooCoarse { step: config.step, t1: w[0], t2: w[1] });
        }
    }

    let center = target.center();
    ts.into_iter()
        .map(|t| {
            let r = target.record(ZeroKind::OnLine, Complex64::new(center, t), Method::SignChange)?;
            if !(r.residual < config.residual_tol) {
                return Err(Error::Unrefined { at: r.s(), residual: r.residual });
            }
            Ok(r)
        })
        .collect()
}

/// [`scan_line`], halving the step on `StepTooCoarse` down to [`MIN_STEP`].
pub fn scan_line_adaptive(target: &Target, config: &ScanConfig) -> Result<Vec<ZeroRecord>> {
    scan_line_adaptive_with(target, config, |t| target.line_value(t))
}

pub fn scan_line_adaptive_with<F>(target: &Target, config: &ScanConfig, line: F) -> Result<Vec<ZeroRecord>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let mut cfg = *config;
    loop {
        match scan_line_with(target, &cfg, &line) {
            Err(Error::StepTooCoarse { .. }) if cfg.step / 2.0 >= MIN_STEP => cfg.step /= 2.0,
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constant_term::{phi0, phi_k};

    #[test]
    fn line_function_matches_phi() {
        let v = line_function(FieldSpec::Rational, 3.0, 5.0).unwrap();
        let p = phi0(3.0, Complex64::new(0.5, 5.0)).unwrap();
        assert!((p.re - 2.0 * 3f64.sqrt() * v).abs() <= 1e-10 * p.norm());
        assert!(p.im.abs() <= 1e-10 * p.norm());
        let k = FieldSpec::ImaginaryQuadratic(2);
        let v = line_function(k, 2.0, 4.0).unwrap();
        let p = phi_k(k, 2.0, Complex64::new(1.0, 4.0)).unwrap();
        assert!((p.re - 4.0 * v).abs() <= 1e-10 * p.norm());
    }

    #[test]
    fn line_function_even_in_t() {
        let a = line_function(FieldSpec::Rational, 2.0, 3.7).unwrap();
        let b = line_function(FieldSpec::Rational, 2.0, -3.7).unwrap();
        assert!((a - b).abs() <= 1e-12 * a.abs());
    }

    #[test]
    fn line_function_rejects_center() {
        assert!(matches!(line_function(FieldSpec::Rational, 2.0, 0.01), Err(Error::Domain(_))));
    }

    #[test]
    fn empty_range_gives_no_zeros() {
        let t = Target::field(FieldSpec::Rational, 1.0).unwrap();
        let cfg = ScanConfig::with_range(3.0, 3.0);
        assert!(scan_line(&t, &cfg).unwrap().is_empty());
    }

    #[test]
    fn scan_brackets_sign_changes() {
        let t = Target::field(FieldSpec::Rational, 2.0).unwrap();
        let cfg = ScanConfig::with_range(0.5, 10.0);
        let zs = scan_line(&t, &cfg).unwrap();
        assert!(!zs.is_empty());
        for z in &zs {
            assert_eq!(z.re, 0.5);
            let lo = t.line_value(z.im - 1e-6).unwrap();
            let hi = t.line_value(z.im + 1e-6).unwrap();
            assert!(lo * hi < 0.0, "{z:?}");
            assert!(z.residual < cfg.residual_tol);
        }
        assert!(zs.windows(2).all(|w| w[0].im < w[1].im));
    }

    #[test]
    fn coarse_step_is_reported_and_adaptive_recovers() {
        let t = Target::field(FieldSpec::Rational, 4.0).unwrap();
        let cfg = ScanConfig { step: 0.5, ..ScanConfig::with_range(0.5, 10.0) };
        let err = scan_line(&t, &cfg);
        assert!(matches!(err, Err(Error::StepTooCoarse { .. })), "{err:?}");
        let zs = scan_line_adaptive(&t, &cfg).unwrap();
        let fine = scan_line(&t, &ScanConfig::with_range(0.5, 10.0)).unwrap();
        assert_eq!(zs.len(), fine.len());
    }
}
