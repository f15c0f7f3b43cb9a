//! The acceptance battery. Each criterion returns its checks; evaluation
//! errors become failing checks carrying the error text.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Check, VerifyReport};
use crate::constant_term::{
    hecke_determinant, hecke_determinant_product, maass_selberg_norm_line, maass_selberg_norm_real, phi,
    phi_center, HeckeSpec,
};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::special::{dedekind_eta, dirichlet_l, riemann_zeta, EULER_GAMMA};
use crate::spectral::{
    astar_center_root, astar_kronecker, astar_spectral, chowla_selberg_delta, monotonicity_check,
    monotonicity_check_with, rho_track, threshold_bracket,
};
use crate::zeros::{
    certify_all, count_rectangle, find_real_zero, scan_line, Rect, ScanConfig, Target,
};
use crate::zeta::{lambda, lambda_k, lattice_zeta_bruteforce, xi_log_derivative_at_zero};

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "functional equations of the completed zeta functions"),
    (2, "logarithmic derivative of ξ at 0"),
    (3, "critical height for Q"),
    (4, "critical heights for the nine imaginary quadratic fields"),
    (5, "all complex zeros on the critical line (Q)"),
    (6, "all complex zeros on the critical line (imaginary quadratic)"),
    (7, "real zero threshold"),
    (8, "centre value of the constant term"),
    (9, "Hecke congruence subgroup determinant and zeros"),
    (10, "Maass–Selberg positivity"),
    (11, "eigenvalue ladder monotonicity"),
    (12, "lattice sums against ζ(2)L(2,χ)"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Multiplies every tolerance. Only test harnesses change it.
    pub tolerance_scale: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { tolerance_scale: 1.0 }
    }
}

impl SuiteOptions {
    fn tol(&self, t: f64) -> f64 {
        t * self.tolerance_scale
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn failed(id: impl Into<String>, anchor: &str, e: impl std::fmt::Display) -> Check {
    Check::new(id, anchor).with_status(false).with_detail(format!("error: {e}"))
}

fn guard(id: &str, anchor: &str, f: impl FnOnce() -> Result<Vec<Check>>) -> Vec<Check> {
    f().unwrap_or_else(|e| vec![failed(id, anchor, e)])
}

/// Deterministic low-discrepancy points in `[0, 1)²`.
fn weyl(k: usize) -> (f64, f64) {
    const G1: f64 = 0.754_877_666_246_692_7;
    const G2: f64 = 0.569_840_290_998_053_3;
    let k = k as f64 + 1.0;
    ((0.5 + G1 * k).fract(), (0.5 + G2 * k).fract())
}

fn max_functional_residual<F: Fn(Complex64) -> Result<Complex64> + Sync>(f: F, im_max: f64) -> Result<f64> {
    (0..50)
        .into_par_iter()
        .map(|k| {
            let (u, v) = weyl(k);
            let s = c(-1.0 + 3.0 * u, im_max * (2.0 * v - 1.0));
            let a = f(s)?;
            let b = f(1.0 - s)?;
            Ok((a - b).norm() / a.norm())
        })
        .collect::<Result<Vec<f64>>>()
        .map(|v| v.into_iter().fold(0.0, f64::max))
}

pub fn criterion_1(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "completed zeta functions satisfy Λ(s) = Λ(1−s)";
    let tol = o.tol(1e-10);
    let mut out = guard("c01-q", ANCHOR, || {
        let m = max_functional_residual(lambda, 50.0)?;
        Ok(vec![Check::close("c01-q", ANCHOR, m, 0.0, tol)])
    });
    for f in FieldSpec::imaginary() {
        let id = format!("c01-d{}", f.label());
        out.extend(guard(&id, ANCHOR, || {
            let m = max_functional_residual(|s| lambda_k(f, s), 30.0)?;
            Ok(vec![Check::close(id.clone(), ANCHOR, m, 0.0, tol)])
        }));
    }
    out
}

pub fn criterion_2(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "1 + ξ′(0)/ξ(0) = (log 4π − γ)/2";
    guard("c02", ANCHOR, || {
        let (d, _) = xi_log_derivative_at_zero(FieldSpec::Rational)?;
        let want = 0.5 * ((4.0 * PI).ln() - EULER_GAMMA);
        Ok(vec![Check::close("c02", ANCHOR, 1.0 + d, want, o.tol(1e-8))])
    })
}

pub fn criterion_3(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "a* = 4πe^{−γ} = 7.055…";
    guard("c03", ANCHOR, || {
        let v = astar_spectral(FieldSpec::Rational)?.value;
        Ok(vec![
            Check::relative("c03-closed-form", ANCHOR, v, 4.0 * PI * (-EULER_GAMMA).exp(), o.tol(1e-8)),
            // "7.055…" is truncated: the printed digits fix v to [7.055, 7.056)
            Check::close("c03-printed", ANCHOR, v, 7.0555, o.tol(5e-4))
                .with_detail(format!("printed 7.055…, |v − 7.055| = {:e}", (v - 7.055).abs())),
        ])
    })
}

fn pairwise_relative(values: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            worst = worst.max((values[i] - values[j]).abs() / values[i].abs());
        }
    }
    worst
}

pub fn criterion_4(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "a*_K from the Kronecker limit formula: ≈ 3.00681 (D=1), ≈ 3.2581 (D=2)";
    let mut out = Vec::new();
    for (d, printed, tol) in [(1u32, 3.00681, 1e-5), (2, 3.2581, 1e-4)] {
        let id = format!("c04-printed-d{d}");
        out.extend(guard(&id, ANCHOR, || {
            let v = astar_kronecker(FieldSpec::ImaginaryQuadratic(d))?.value;
            Ok(vec![Check::relative(id.clone(), ANCHOR, v, printed, o.tol(tol))])
        }));
    }
    let rows: Vec<Vec<Check>> = FieldSpec::imaginary()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|f| {
            let id = format!("c04-routes-d{}", f.label());
            guard(&id, "spectral, centre-root and Kronecker routes agree", || {
                let v = [
                    astar_spectral(f)?.value,
                    astar_center_root(f)?.value,
                    astar_kronecker(f)?.value,
                ];
                Ok(vec![Check::new(id.clone(), "spectral, centre-root and Kronecker routes agree")
                    .with_values(v.to_vec(), vec![v[0]; 3], o.tol(1e-6))
                    .with_status(pairwise_relative(&v) <= o.tol(1e-6))
                    .with_detail(format!("max pairwise relative difference {:e}", pairwise_relative(&v)))])
            })
        })
        .collect();
    out.extend(rows.into_iter().flatten());
    out
}

/// Line zeros from the scan against the argument-principle count on the
/// same window, with every zero certified simple.
fn line_agreement(
    id: &str,
    anchor: &str,
    target: &Target,
    rect: Rect,
    residual_tol: f64,
) -> Result<Vec<Check>> {
    let cfg = ScanConfig { residual_tol, ..ScanConfig::with_range(rect.t_lo, rect.t_hi) };
    let mut zeros = scan_line(target, &cfg)?;
    certify_all(target, &mut zeros, &cfg)?;
    let n = count_rectangle(target, &rect, &cfg)?;
    let simple = zeros.iter().all(|z| z.simple);
    let worst = zeros.iter().map(|z| z.residual).fold(0.0, f64::max);
    Ok(vec![
        Check::close(format!("{id}-count"), anchor, n as f64, zeros.len() as f64, 0.0)
            .with_detail(format!("{} line zeros, winding count {n}", zeros.len())),
        Check::new(format!("{id}-simple"), anchor)
            .with_values(vec![zeros.iter().filter(|z| z.simple).count() as f64], vec![zeros.len() as f64], 0.0)
            .with_status(simple),
        Check::new(format!("{id}-residual"), anchor)
            .with_values(vec![worst], vec![0.0], residual_tol)
            .with_status(worst < residual_tol),
    ])
}

pub fn criterion_5(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "complex zeros of φ₀(a, s) are simple and lie on Re s = 1/2";
    [1.0, 3.0, 7.0555, 10.0]
        .par_iter()
        .map(|&a| {
            let id = format!("c05-a{a}");
            guard(&id, ANCHOR, || {
                let t = Target::field(FieldSpec::Rational, a)?;
                line_agreement(&id, ANCHOR, &t, Rect::new(0.2, 0.8, 0.5, 30.0)?, o.tol(1e-9))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn criterion_6(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "complex zeros of φ_K(a, s) are simple and lie on Re s = 1";
    let cases: Vec<(FieldSpec, f64)> = FieldSpec::imaginary().flat_map(|f| [(f, 1.0), (f, 5.0)]).collect();
    cases
        .par_iter()
        .map(|&(f, a)| {
            let id = format!("c06-d{}-a{a}", f.label());
            guard(&id, ANCHOR, || {
                let t = Target::field(f, a)?;
                line_agreement(&id, ANCHOR, &t, Rect::new(0.4, 1.6, 0.5, 20.0)?, o.tol(1e-9))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn criterion_7(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "a real zero ρ_a exists exactly above the critical height and is nondecreasing in a";
    let cfg = ScanConfig::default();
    let mut out = Vec::new();
    for (f, absent, present) in [
        (FieldSpec::Rational, vec![2.0, 5.0], vec![8.0, 10.0, 100.0]),
        (FieldSpec::ImaginaryQuadratic(1), vec![2.0], vec![3.1, 10.0]),
    ] {
        let (lo, hi) = f.real_window();
        for a in absent {
            let id = format!("c07-{}-a{a}-none", f.label());
            out.extend(guard(&id, ANCHOR, || {
                let r = find_real_zero(f, a, &cfg)?;
                Ok(vec![Check::new(id.clone(), ANCHOR).with_status(r.is_none())
                    .with_detail(format!("{:?}", r.map(|z| z.re)))])
            }));
        }
        let id = format!("c07-{}-present", f.label());
        out.extend(guard(&id, ANCHOR, || {
            let rhos = present
                .iter()
                .map(|&a| Ok(find_real_zero(f, a, &cfg)?.map(|z| z.re)))
                .collect::<Result<Vec<Option<f64>>>>()?;
            let vals: Vec<f64> = rhos.iter().flatten().copied().collect();
            let ok = vals.len() == present.len()
                && vals.iter().all(|&r| r > lo && r < hi)
                && vals.windows(2).all(|w| w[0] <= w[1]);
            Ok(vec![Check::new(id.clone(), ANCHOR)
                .with_values(vals, present.clone(), 0.0)
                .with_status(ok)
                .with_detail(format!("heights {present:?}"))])
        }));
        let id = format!("c07-{}-threshold", f.label());
        out.extend(guard(&id, ANCHOR, || {
            let astar = astar_spectral(f)?.value;
            let (blo, bhi) = if f.is_rational() { (5.0, 8.0) } else { (2.0, 3.1) };
            let (l, h) = threshold_bracket(f, blo, bhi, 1e-3, &cfg)?;
            let mid = 0.5 * (l + h);
            Ok(vec![Check::close(id.clone(), ANCHOR, mid, astar, o.tol(1e-3))
                .with_detail(format!("bracket [{l}, {h}]"))])
        }));
    }
    out
}

/// `φ(a, c)` from off-centre values: Richardson extrapolation in `ε²` of
/// `φ(a, c + ε)` at `ε = 0.01, 0.005, 0.0025`.
pub fn center_value_extrapolated(field: FieldSpec, a: f64) -> Result<f64> {
    let cen = field.critical_re();
    let v = [0.01, 0.005, 0.0025]
        .iter()
        .map(|&e| Ok(phi(field, a, c(cen + e, 0.0))?.re))
        .collect::<Result<Vec<f64>>>()?;
    let r1 = [(4.0 * v[1] - v[0]) / 3.0, (4.0 * v[2] - v[1]) / 3.0];
    Ok((16.0 * r1[1] - r1[0]) / 15.0)
}

pub fn criterion_8(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "centre value a^{1/2} ln(a/a*) (Q) and (2a/w_K) ln(a/a*_K)";
    let fields = [
        FieldSpec::Rational,
        FieldSpec::ImaginaryQuadratic(1),
        FieldSpec::ImaginaryQuadratic(2),
        FieldSpec::ImaginaryQuadratic(3),
    ];
    let mut out = Vec::new();
    for f in fields {
        for a in [2.0, 7.0555, 20.0] {
            let id = format!("c08-{}-a{a}", f.label());
            out.extend(guard(&id, ANCHOR, || {
                let e = center_value_extrapolated(f, a)?;
                Ok(vec![Check::close(id.clone(), ANCHOR, phi_center(f, a), e, o.tol(1e-8))])
            }));
        }
    }
    out
}

pub fn criterion_9(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "Γ₀(p) scattering determinant factors; zeros lie on Re s = 1/2";
    let mut out = guard("c09-identity", ANCHOR, || {
        let mut worst: f64 = 0.0;
        for k in 0..20 {
            let (u, v) = weyl(k);
            let s = c(0.2 + 0.6 * u, 20.0 * (2.0 * v - 1.0));
            let (p, a) = if k % 2 == 0 { (2, 1.0 + u) } else { (3, 1.0 + v) };
            let d = hecke_determinant(p, a, s)?;
            let q = hecke_determinant_product(p, a, s)?;
            worst = worst.max((d - q).norm() / d.norm());
        }
        Ok(vec![Check::close("c09-identity", ANCHOR, worst, 0.0, o.tol(1e-10))])
    });
    let mut cases = Vec::new();
    for p in [2u32, 3] {
        for sign in [1i8, -1] {
            for a in [1.0, 2.0] {
                cases.push((p, sign, a));
            }
        }
    }
    let rows: Vec<Vec<Check>> = cases
        .par_iter()
        .map(|&(p, sign, a)| {
            let id = format!("c09-p{p}-s{sign}-a{a}");
            guard(&id, ANCHOR, || {
                let t = Target::Hecke(HeckeSpec::new(p, sign, a)?);
                line_agreement(&id, ANCHOR, &t, Rect::new(0.2, 0.8, 0.5, 20.0)?, o.tol(1e-9))
            })
        })
        .collect();
    out.extend(rows.into_iter().flatten());
    out
}

pub fn criterion_10(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "Maass–Selberg norm of the truncated Eisenstein series is positive";
    let floor = -o.tol(0.0);
    let mut out = Vec::new();
    for a in [1.0, 2.0, 10.0] {
        let id = format!("c10-line-a{a}");
        out.extend(guard(&id, ANCHOR, || {
            let v = (1..=300)
                .into_par_iter()
                .map(|k| maass_selberg_norm_line(a, 0.1 * k as f64))
                .collect::<Result<Vec<f64>>>()?;
            let m = v.iter().copied().fold(f64::INFINITY, f64::min);
            Ok(vec![Check::new(id.clone(), ANCHOR).with_values(vec![m], vec![0.0], 0.0).with_status(m > floor)
                .with_detail("minimum over r = 0.1, 0.2, …, 30")])
        }));
    }
    for sigma in [0.6, 0.75, 0.9] {
        let id = format!("c10-real-s{sigma}");
        out.extend(guard(&id, ANCHOR, || {
            let v = maass_selberg_norm_real(10.0, sigma)?;
            Ok(vec![Check::new(id.clone(), ANCHOR).with_values(vec![v], vec![0.0], 0.0).with_status(v > floor)])
        }));
    }
    out
}

pub fn criterion_11(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "each μ_j(a) is a decreasing function of a";
    let cfg = ScanConfig::default();
    let margin = 1e-6 / o.tolerance_scale.max(f64::MIN_POSITIVE);
    let mut out = Vec::new();
    for (f, grid, t_max, j) in [
        (FieldSpec::Rational, vec![1.0, 2.0, 4.0, 8.0], 30.0, 10),
        (FieldSpec::ImaginaryQuadratic(1), vec![1.0, 2.0, 4.0], 25.0, 8),
    ] {
        let id = format!("c11-{}", f.label());
        out.extend(guard(&id, ANCHOR, || {
            let r = monotonicity_check_with(f, &grid, t_max, margin, Some(j), &cfg)?;
            Ok(r.checks
                .into_iter()
                .map(|mut ch| {
                    ch.id = format!("c11-{}", ch.id);
                    ch.paper_anchor = ANCHOR.into();
                    ch
                })
                .collect())
        }));
    }
    out
}

pub fn criterion_12(o: &SuiteOptions) -> Vec<Check> {
    const ANCHOR: &str = "ζ_K(2) = ζ(2) L(2, χ_{d_K})";
    let mut out = Vec::new();
    for d in [1u32, 3] {
        let id = format!("c12-d{d}");
        out.extend(guard(&id, ANCHOR, || {
            let f = FieldSpec::ImaginaryQuadratic(d);
            let s = c(2.0, 0.0);
            let lattice = lattice_zeta_bruteforce(f, s, 2000.0)?.re;
            let chi = f.character().expect("imaginary quadratic");
            let product = (riemann_zeta(s)? * dirichlet_l(s, chi)?).re;
            Ok(vec![Check::close(id.clone(), ANCHOR, lattice, product, o.tol(1e-6))])
        }));
    }
    out
}

/// Runs criterion `n` (1 to 12).
pub fn criterion(n: u8, o: &SuiteOptions) -> Vec<Check> {
    match n {
        1 => criterion_1(o),
        2 => criterion_2(o),
        3 => criterion_3(o),
        4 => criterion_4(o),
        5 => criterion_5(o),
        6 => criterion_6(o),
        7 => criterion_7(o),
        8 => criterion_8(o),
        9 => criterion_9(o),
        10 => criterion_10(o),
        11 => criterion_11(o),
        12 => criterion_12(o),
        _ => vec![failed(format!("c{n:02}"), "", format!("no criterion {n}"))],
    }
}

/// Checks beyond the numbered criteria: full-strip method agreement
/// including the real zeros, the large-height limit of `ρ_a`, thresholds
/// for every field with `a* > 1`, and the product formula for `Δ`.
pub fn extended(o: &SuiteOptions) -> Vec<Check> {
    let cfg = ScanConfig::default();
    let mut out = Vec::new();

    const STRIP: &str = "count over the full strip equals line zeros plus real zeros";
    let strip_cases = [
        (FieldSpec::Rational, 10.0, 20.0),
        (FieldSpec::Rational, 100.0, 20.0),
        (FieldSpec::ImaginaryQuadratic(1), 5.0, 15.0),
        (FieldSpec::ImaginaryQuadratic(7), 1.0, 15.0),
    ];
    let rows: Vec<Vec<Check>> = strip_cases
        .par_iter()
        .map(|&(f, a, t)| {
            let id = format!("ext-strip-{}-a{a}", f.label());
            guard(&id, STRIP, || {
                let target = Target::field(f, a)?;
                let cen = f.critical_re();
                let half = 0.98 * (f.real_window().1 - cen);
                let rect = Rect::new(cen - half, cen + half, -t, t)?;
                let line = scan_line(&target, &ScanConfig::with_range(0.05, t))?.len();
                let real = find_real_zero(f, a, &cfg)?.map_or(0, |z| if z.re - cen < half { 2 } else { 0 });
                let n = count_rectangle(&target, &rect, &cfg)?;
                Ok(vec![Check::close(id.clone(), STRIP, n as f64, (2 * line + real) as f64, 0.0)])
            })
        })
        .collect();
    out.extend(rows.into_iter().flatten());

    const LIMIT: &str = "ρ_a tends to the end of the real window";
    for f in [FieldSpec::Rational, FieldSpec::ImaginaryQuadratic(1)] {
        let id = format!("ext-limit-{}", f.label());
        out.extend(guard(&id, LIMIT, || {
            let tr = rho_track(f, &[1e3, 1e6], &ScanConfig::with_range(0.05, 0.05))?;
            let end = f.real_window().1;
            let gaps: Vec<f64> = tr.rho.iter().map(|r| r.map_or(f64::INFINITY, |r| end - r)).collect();
            Ok(vec![Check::new(id.clone(), LIMIT)
                .with_values(gaps.clone(), vec![0.1, 0.02], 0.0)
                .with_status(gaps[0] < 0.1 && gaps[1] < 0.02 && tr.rho_nondecreasing())])
        }));
    }

    const THRESH: &str = "the real zero appears at the critical height";
    let fields: Vec<FieldSpec> = FieldSpec::all().filter(|f| astar_spectral(*f).map_or(false, |r| r.value > 1.0)).collect();
    let rows: Vec<Vec<Check>> = fields
        .par_iter()
        .map(|&f| {
            let id = format!("ext-threshold-{}", f.label());
            guard(&id, THRESH, || {
                let astar = astar_spectral(f)?.value;
                let (l, h) = threshold_bracket(f, 1.0, 10.0, 1e-3, &cfg)?;
                Ok(vec![Check::close(id.clone(), THRESH, 0.5 * (l + h), astar, o.tol(1e-3))])
            })
        })
        .collect();
    out.extend(rows.into_iter().flatten());

    const MONO: &str = "each μ_j(a) is a decreasing function of a";
    for (f, grid, t_max) in [
        (FieldSpec::Rational, vec![1.0, 2.0, 4.0, 8.0], 25.0),
        (FieldSpec::ImaginaryQuadratic(1), vec![1.0, 2.0, 4.0], 15.0),
    ] {
        let id = format!("ext-monotone-{}", f.label());
        out.extend(guard(&id, MONO, || {
            let r = monotonicity_check(f, &grid, t_max, &cfg)?;
            Ok(vec![Check::new(id.clone(), MONO).with_status(r.passed())
                .with_detail(format!("{} pairs", r.checks.len()))])
        }));
    }

    const DELTA: &str = "product formula for Δ at i√D";
    for d in [1u32, 2] {
        let id = format!("ext-delta-d{d}");
        out.extend(guard(&id, DELTA, || {
            let eta = dedekind_eta(c(0.0, (d as f64).sqrt()))?.norm().powi(24);
            Ok(vec![Check::relative(id.clone(), DELTA, chowla_selberg_delta(d)?, eta, o.tol(1e-9))])
        }));
    }
    out
}

/// The whole battery: the twelve criteria, plus [`extended`] for `Full`.
pub fn run_suite(suite: Suite, o: &SuiteOptions) -> VerifyReport {
    let mut report = VerifyReport::new(match suite {
        Suite::Core => "core",
        Suite::Full => "full",
    });
    for (n, _) in CRITERIA {
        for ch in criterion(n, o) {
            report.push(ch);
        }
    }
    if suite == Suite::Full {
        for ch in extended(o) {
            report.push(ch);
        }
    }
    report
}
