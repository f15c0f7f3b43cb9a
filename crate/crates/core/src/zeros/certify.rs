use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{winding_number, Rect, ScanConfig, Target, WindingOptions, ZeroKind, ZeroRecord};
use crate::constant_term::{maass_selberg_norm_line, maass_selberg_norm_real};
use crate::error::Result;
use crate::field::FieldSpec;

/// Step of the central difference for `G′`.
pub const DERIVATIVE_STEP: f64 = 1e-6;
/// Lower bound on `|G′|/scale` at a simple zero.
pub const DERIVATIVE_FLOOR: f64 = 1e-8;
/// Largest box half-width used for certification.
pub const MAX_BOX: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    /// Zero counts on boxes of shrinking half-width.
    pub box_counts: Vec<i64>,
    pub derivative_ratio: f64,
    /// Maass–Selberg norm at the zero, where an expression is available.
    pub maass_selberg: Option<f64>,
    pub simple: bool,
}

/// `|f′(ρ)|/scale(ρ)` by a central difference in the real direction.
pub fn derivative_ratio<F>(f: &F, rho: Complex64) -> Result<f64>
where
    F: Fn(Complex64) -> Result<(Complex64, f64)>,
{
    let (_, scale) = f(rho)?;
    let (fp, _) = f(rho + DERIVATIVE_STEP)?;
    let (fm, _) = f(rho - DERIVATIVE_STEP)?;
    Ok(((fp - fm) / (2.0 * DERIVATIVE_STEP)).norm() / scale)
}

/// Certifies a simple zero of `f` at `rho`: boxes of half-width `radius`,
/// `radius/2` and `radius/4` must each contain exactly one zero and the
/// normalised derivative must exceed [`DERIVATIVE_FLOOR`].
pub fn certify_simple_with<F>(f: F, rho: Complex64, radius: f64, opts: &WindingOptions) -> Result<Certificate>
where
    F: Fn(Complex64) -> Result<(Complex64, f64)> + Sync,
{
    let box_counts = [1.0, 0.5, 0.25]
        .iter()
        .map(|k| winding_number(&f, &Rect::around(rho, radius * k)?, opts))
        .collect::<Result<Vec<i64>>>()?;
    let derivative_ratio = derivative_ratio(&f, rho)?;
    let simple = box_counts.iter().all(|&n| n == 1) && derivative_ratio > DERIVATIVE_FLOOR;
    Ok(Certificate { box_counts, derivative_ratio, maass_selberg: None, simple })
}

fn box_radius(record: &ZeroRecord, center: f64) -> f64 {
    let gap = match record.kind {
        ZeroKind::OnLine => record.im,
        ZeroKind::Real => record.re - center,
    };
    MAX_BOX.min(0.5 * gap.abs())
}

/// Certificate for a zero of `target`.
pub fn certify_target(target: &Target, record: &ZeroRecord, config: &ScanConfig) -> Result<Certificate> {
    let radius = box_radius(record, target.center());
    let mut cert = certify_simple_with(|s| target.entire_scaled(s), record.s(), radius, &config.winding())?;
    if matches!(target, Target::Field { field: FieldSpec::Rational, .. }) {
        cert.maass_selberg = match record.kind {
            ZeroKind::OnLine => Some(maass_selberg_norm_line(record.a, record.im)?),
            ZeroKind::Real if record.re < 1.0 => Some(maass_selberg_norm_real(record.a, record.re)?),
            ZeroKind::Real => None,
        };
    }
    Ok(cert)
}

/// Whether `record` is a certified simple zero of its field's `φ`.
pub fn certify_simple(record: &ZeroRecord, config: &ScanConfig) -> Result<bool> {
    let target = Target::field(record.field, record.a)?;
    Ok(certify_target(&target, record, config)?.simple)
}

/// Certifies every record in place, setting `simple`.
pub fn certify_all(target: &Target, records: &mut [ZeroRecord], config: &ScanConfig) -> Result<()> {
    let flags = records
        .par_iter()
        .map(|r| Ok(certify_target(target, r, config)?.simple))
        .collect::<Result<Vec<bool>>>()?;
    for (r, f) in records.iter_mut().zip(flags) {
        r.simple = f;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::{find_real_zero, scan_line};

    #[test]
    fn synthetic_double_zero_fails() {
        let rho = Complex64::new(0.5, 3.0);
        let f = move |s: Complex64| Ok(((s - rho) * (s - rho), 1.0));
        let c = certify_simple_with(f, rho + 1e-3, 0.05, &WindingOptions::default()).unwrap();
        assert!(!c.simple);
        assert!(c.box_counts.iter().all(|&n| n == 2));
    }

    #[test]
    fn synthetic_simple_zero_passes() {
        let rho = Complex64::new(0.5, 3.0);
        let f = move |s: Complex64| Ok((s - rho, 1.0));
        assert!(certify_simple_with(f, rho, 0.05, &WindingOptions::default()).unwrap().simple);
    }

    #[test]
    fn rational_zeros_certified() {
        let cfg = ScanConfig::with_range(0.5, 12.0);
        let t = Target::field(FieldSpec::Rational, 1.0).unwrap();
        let zs = scan_line(&t, &cfg).unwrap();
        assert!(!zs.is_empty());
        for z in &zs {
            let c = certify_target(&t, z, &cfg).unwrap();
            assert!(c.simple, "{z:?} {c:?}");
            assert!(c.maass_selberg.unwrap() > 0.0);
        }
        let r = find_real_zero(FieldSpec::Rational, 10.0, &cfg).unwrap().unwrap();
        assert!(certify_simple(&r, &cfg).unwrap());
    }
}
