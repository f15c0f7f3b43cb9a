//! Eigenvalues of the cut-off Laplacian from zeros, ladder monotonicity,
//! three independent routes to the critical height `a*`, and trajectories
//! of the real zero `ρ_a`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::calculus::circle_mean;
use crate::constant_term::phi;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::special::{dedekind_eta, kronecker_symbol, log_gamma, EULER_GAMMA};
use crate::verify::{Check, VerifyReport};
use crate::zeros::{find_real_zero, scan_line, ScanConfig, Target, ZeroKind, ZeroRecord};
use crate::zeta::xi_log_derivative_at_zero;

/// Ladders are compared below `tMax − LADDER_BUFFER`.
pub const LADDER_BUFFER: f64 = 0.5;
/// Relative disagreement tolerated before a Kronecker branch is rejected.
pub const CONVENTION_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AStarMethod {
    SpectralDerivative,
    CenterRoot,
    KroneckerClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AStarResult {
    pub field: FieldSpec,
    pub method: AStarMethod,
    pub value: f64,
    pub accuracy_estimate: f64,
}

/// `μ = ρ(1−ρ)` for `ℚ`, `μ = ρ(2−ρ)` otherwise.
pub fn mu_from_zero(field: FieldSpec, record: &ZeroRecord) -> f64 {
    field.eigenvalue_of(record.s()).re
}

/// `a*` from the logarithmic derivative of `ξ` (resp. `ξ_K`) at 0:
/// `exp(2(1 + ξ′/ξ))` for `ℚ` and `exp(1 + ξ_K′/ξ_K)` otherwise.
pub fn astar_spectral(field: FieldSpec) -> Result<AStarResult> {
    let (d, err) = xi_log_derivative_at_zero(field)?;
    let k = if field.is_rational() { 2.0 } else { 1.0 };
    let value = (k * (1.0 + d)).exp();
    Ok(AStarResult {
        field,
        method: AStarMethod::SpectralDerivative,
        value,
        accuracy_estimate: k * err * value,
    })
}

const ROOT_GRID: [f64; 5] = [1.0, 2.0, 4.0, 8.0, 16.0];
const ROOT_RADIUS: f64 = 0.25;
const ROOT_POINTS: usize = 96;

/// `a*` from the centre value of `φ`, which is `κ a^c ln(a/a*)`.
///
/// The centre value is taken as the mean of `φ` over a circle around the
/// removable point, so no closed form enters. `ln a*` is the least-squares
/// constant of `ln a − φ(a, c)/(κ a^c)` over a grid of heights; the spread
/// of the individual estimates is the accuracy estimate.
pub fn astar_center_root(field: FieldSpec) -> Result<AStarResult> {
    let c = field.critical_re();
    let kappa = if field.is_rational() { 1.0 } else { 2.0 / field.units() as f64 };
    let estimates = ROOT_GRID
        .par_iter()
        .map(|&a| {
            let v = circle_mean(|s| phi(field, a, s), Complex64::new(c, 0.0), ROOT_RADIUS, ROOT_POINTS)?;
            Ok(a.ln() - v.re / (kappa * a.powf(c)))
        })
        .collect::<Result<Vec<f64>>>()?;
    let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
    let spread = estimates.iter().map(|e| (e - mean).abs()).fold(0.0, f64::max);
    let value = mean.exp();
    Ok(AStarResult {
        field,
        method: AStarMethod::CenterRoot,
        value,
        accuracy_estimate: (spread + 1e-14) * value,
    })
}

/// Kronecker limit value at the point `τ`:
/// `4 (Im τ)² e^{−γ} |η(τ)|⁴ · 2π/√|d_K|`.
fn kronecker_at(field: FieldSpec, tau: Complex64) -> Result<f64> {
    let eta = dedekind_eta(tau)?.norm();
    let root_d = (field.discriminant().unsigned_abs() as f64).sqrt();
    Ok(4.0 * tau.im * tau.im * (-EULER_GAMMA).exp() * eta.powi(4) * 2.0 * PI / root_d)
}

/// `a*_K` from the Kronecker limit formula at the generator `ω` of the ring
/// of integers: `i√D` for `D ≡ 1, 2 (mod 4)` and `(1+i√D)/2` for
/// `D ≡ 3 (mod 4)`.
///
/// The result is compared against [`astar_spectral`]; if it disagrees while
/// the other choice of `τ` agrees, `ConventionMismatch` reports both.
pub fn astar_kronecker(field: FieldSpec) -> Result<AStarResult> {
    let d = field
        .d()
        .ok_or_else(|| Error::Domain("the Kronecker route needs an imaginary quadratic field".into()))?;
    let r = (d as f64).sqrt();
    let omega = field.omega().expect("imaginary quadratic");
    let other = if d % 4 == 3 { Complex64::new(0.0, r) } else { Complex64::new(0.5, 0.5 * r) };
    let selected = kronecker_at(field, omega)?;
    let spectral = astar_spectral(field)?.value;
    let off = |v: f64| (v - spectral).abs() / spectral;
    if off(selected) > CONVENTION_TOLERANCE {
        let alt = kronecker_at(field, other)?;
        if off(alt) <= CONVENTION_TOLERANCE {
            return Err(Error::ConventionMismatch { selected, other: alt, spectral });
        }
    }
    Ok(AStarResult {
        field,
        method: AStarMethod::KroneckerClosedForm,
        value: selected,
        accuracy_estimate: 1e-13 * selected,
    })
}

/// Every route that applies to `field`.
pub fn astar_all(field: FieldSpec) -> Result<Vec<AStarResult>> {
    let mut out = vec![astar_spectral(field)?, astar_center_root(field)?];
    if !field.is_rational() {
        out.push(astar_kronecker(field)?);
    }
    Ok(out)
}

/// `e²/a*_K`, the value of `exp(1 + ξ_K′(1)/ξ_K(1))`. This is the height
/// obtained when the log-derivative is taken at `s = 1` instead of `s = 0`;
/// it is not a zero of the centre value.
pub fn reflected_astar(field: FieldSpec) -> Result<f64> {
    if field.is_rational() {
        return Err(Error::Domain("reflected a* is defined for imaginary quadratic fields".into()));
    }
    Ok((2.0 - astar_spectral(field)?.value.ln()).exp())
}

/// `Δ(i√D) = (8πD)^{−6} (Π_{m=1}^{4D} Γ(m/4D)^{(−4D/m)})^{3w}` for `D ∈ {1, 2}`.
pub fn chowla_selberg_delta(d: u32) -> Result<f64> {
    if d != 1 && d != 2 {
        return Err(Error::Domain(format!(
            "the product formula needs −4D fundamental with class number one; D = {d} is unsupported"
        )));
    }
    let w = FieldSpec::ImaginaryQuadratic(d).units() as f64;
    let n = 4 * d as u64;
    let mut log_prod = 0.0;
    for m in 1..=n {
        let chi = kronecker_symbol(-(n as i64), m);
        if chi != 0 {
            log_prod += chi as f64 * log_gamma(Complex64::new(m as f64 / n as f64, 0.0))?.re;
        }
    }
    Ok((3.0 * w * log_prod - 6.0 * (8.0 * PI * d as f64).ln()).exp())
}

/// Position of a zero on the spectral ladder: `t` for line zeros and
/// `−(ρ − c)` for the real zero, so that `μ` is increasing in it.
pub fn signed_ordinate(record: &ZeroRecord) -> f64 {
    match record.kind {
        ZeroKind::OnLine => record.im,
        ZeroKind::Real => -(record.re - record.field.critical_re()),
    }
}

/// Sorted signed ordinates of all zeros with `t ≤ tMax`, real zero included.
pub fn ladder(field: FieldSpec, a: f64, t_max: f64, config: &ScanConfig) -> Result<Vec<f64>> {
    let target = Target::field(field, a)?;
    let cfg = ScanConfig { t_min: config.exclusion_radius, t_max, ..*config };
    let mut out: Vec<f64> = scan_line(&target, &cfg)?.iter().map(signed_ordinate).collect();
    if let Some(r) = find_real_zero(field, a, config)? {
        out.insert(0, signed_ordinate(&r));
    }
    Ok(out)
}

/// Checks that `μ_j(a)` decreases in `a` index by index, with strict
/// decrease by at least `margin` in the signed ordinate.
pub fn monotonicity_check_with(
    field: FieldSpec,
    a_grid: &[f64],
    t_max: f64,
    margin: f64,
    max_index: Option<usize>,
    config: &ScanConfig,
) -> Result<VerifyReport> {
    if a_grid.windows(2).any(|w| w[0] >= w[1]) || a_grid.iter().any(|&a| a < 1.0) {
        return Err(Error::Domain("aGrid must be ascending with entries >= 1".into()));
    }
    let mut report = VerifyReport::new(format!("monotonicity {field}"));
    let full = a_grid
        .par_iter()
        .map(|&a| ladder(field, a, t_max, config))
        .collect::<Result<Vec<Vec<f64>>>>()?;
    let edge = t_max - LADDER_BUFFER;
    let windowed: Vec<Vec<f64>> = full
        .iter()
        .map(|l| l.iter().copied().filter(|&t| t <= edge).collect())
        .collect();
    for k in 1..a_grid.len() {
        let (a1, a2) = (a_grid[k - 1], a_grid[k]);
        let (l1, l2) = (&windowed[k - 1], &windowed[k]);
        // zeros only move down as a grows and the real zero stays on the
        // ladder, so nothing can leave the window
        if l2.len() < l1.len() {
            return Err(Error::LadderMismatch { a1, len1: l1.len(), a2, len2: l2.len() });
        }
        let n = l1.len().min(l2.len()).min(max_index.unwrap_or(usize::MAX));
        let violations: Vec<String> = (0..n)
            .filter(|&j| l1[j] - l2[j] < margin)
            .map(|j| format!("j={}: {} at a={a1} vs {} at a={a2}", j + 1, l1[j], l2[j]))
            .collect();
        let check = Check::new(format!("ladder-{field}-{a1}-{a2}"), "each eigenvalue μ_j(a) decreases with a")
            .with_values(l2[..n].to_vec(), l1[..n].to_vec(), margin)
            .with_status(violations.is_empty() && (max_index.is_none() || n >= max_index.unwrap_or(0)));
        let check = if violations.is_empty() {
            check.with_detail(format!("{n} indices compared"))
        } else {
            check.with_detail(violations.join("; "))
        };
        report.push(check);
    }
    Ok(report)
}

/// [`monotonicity_check_with`] with non-strict comparison over every
/// index present in both ladders.
pub fn monotonicity_check(field: FieldSpec, a_grid: &[f64], t_max: f64, config: &ScanConfig) -> Result<VerifyReport> {
    monotonicity_check_with(field, a_grid, t_max, 0.0, None, config)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Trajectory {
    pub field: FieldSpec,
    pub a_grid: Vec<f64>,
    pub rho: Vec<Option<f64>>,
    pub t_ladder: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn rho_nondecreasing(&self) -> bool {
        let present: Vec<f64> = self.rho.iter().flatten().copied().collect();
        present.windows(2).all(|w| w[0] <= w[1])
    }
}

/// `ρ_a` and the line ordinates up to `config.t_max` for each height.
pub fn rho_track(field: FieldSpec, a_grid: &[f64], config: &ScanConfig) -> Result<Trajectory> {
    if a_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("aGrid must be ascending".into()));
    }
    let rows = a_grid
        .par_iter()
        .map(|&a| {
            let rho = find_real_zero(field, a, config)?.map(|r| r.re);
            let target = Target::field(field, a)?;
            let t: Vec<f64> = scan_line(&target, config)?.iter().map(|z| z.im).collect();
            Ok((rho, t))
        })
        .collect::<Result<Vec<_>>>()?;
    let (rho, t_ladder) = rows.into_iter().unzip();
    Ok(Trajectory { field, a_grid: a_grid.to_vec(), rho, t_ladder })
}

/// Bisects on `a` for the height where the real zero appears, starting from
/// `lo` without one and `hi` with one, until the bracket is below `tol`.
pub fn threshold_bracket(field: FieldSpec, mut lo: f64, mut hi: f64, tol: f64, config: &ScanConfig) -> Result<(f64, f64)> {
    let has = |a: f64| -> Result<bool> { Ok(find_real_zero(field, a, config)?.is_some()) };
    if has(lo)? || !has(hi)? {
        return Err(Error::Domain(format!("[{lo}, {hi}] does not bracket the threshold")));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if has(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}
