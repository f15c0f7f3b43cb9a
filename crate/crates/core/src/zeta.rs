//! Completed zeta functions `Λ`, `Λ_K`, their entire versions `ξ`, `ξ_K`,
//! and a brute-force lattice sum for `ζ_K`.
//!
//! `ζ_K` is evaluated as `ζ(s) L(s, χ_{d_K})`; the lattice sum is kept only
//! as an independent check. No functional equation is used to move the
//! argument, except at the trivial zeros where the gamma factor has a pole
//! and the zeta factor vanishes.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::calculus::{horner, richardson_derivative, taylor_coefficients};
use crate::error::{finite, Error, Result};
use crate::field::{FieldSpec, CLASS_NUMBER_ONE};
use crate::special::{dirichlet_l, log_gamma, riemann_zeta, EULER_GAMMA};

/// Radius below which `ξ` is taken from its local Taylor expansion around 0 or 1.
pub const LOCAL_RADIUS: f64 = 1e-3;

/// Step for the Richardson log-derivative of `ξ` at 0.
pub const LOG_DERIVATIVE_STEP: f64 = 0.01;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `Λ(s) = π^{−s/2} Γ(s/2) ζ(s)`.
pub fn lambda(s: Complex64) -> Result<Complex64> {
    if s == c(0.0, 0.0) || s == c(1.0, 0.0) {
        return Err(Error::Pole {
            function: "lambda",
            at: s,
        });
    }
    if is_nonpositive_integer(s) && (s.re as i64) % 2 == 0 {
        // Γ(s/2) has a pole where ζ has a trivial zero.
        return lambda(1.0 - s);
    }
    let g = log_gamma(s / 2.0)? - s / 2.0 * PI.ln();
    let z = riemann_zeta(s)?;
    finite("lambda", s, g.exp() * z)
}

/// `Λ_K(s) = (√|d_K| / 2π)^s Γ(s) ζ(s) L(s, χ_{d_K})`.
///
/// For `FieldSpec::Rational` this is `Λ(s)`.
pub fn lambda_k(field: FieldSpec, s: Complex64) -> Result<Complex64> {
    let Some(chi) = field.character() else {
        return lambda(s);
    };
    if s == c(0.0, 0.0) || s == c(1.0, 0.0) {
        return Err(Error::Pole {
            function: "lambda_k",
            at: s,
        });
    }
    if is_nonpositive_integer(s) {
        // ζ(−2k) = 0 and L(−2k−1, χ) = 0 for odd χ.
        return lambda_k(field, 1.0 - s);
    }
    let g = log_gamma(s)? + s * field.conductor_factor().ln();
    let z = riemann_zeta(s)? * dirichlet_l(s, chi)?;
    finite("lambda_k", s, g.exp() * z)
}

/// Residue of `Λ_K` at `s = 1`: `1` for `ℚ`, `h/w_K = 1/w_K` otherwise.
pub fn residue_at_one(field: FieldSpec) -> f64 {
    match field {
        FieldSpec::Rational => 1.0,
        _ => 1.0 / field.units() as f64,
    }
}

fn xi_direct(field: FieldSpec, s: Complex64) -> Result<Complex64> {
    Ok(s * (s - 1.0) * lambda_k(field, s)?)
}

fn field_slot(field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rational => 0,
        FieldSpec::ImaginaryQuadratic(d) => 1 + CLASS_NUMBER_ONE.iter().position(|&x| x == d).unwrap(),
    }
}

/// Taylor coefficients of `ξ_K` at 0 up to `s³`.
pub fn xi_local_coefficients(field: FieldSpec) -> &'static [Complex64] {
    static CACHE: [OnceLock<Vec<Complex64>>; 10] = [const { OnceLock::new() }; 10];
    CACHE[field_slot(field)].get_or_init(|| {
        let mut v = taylor_coefficients(|s| xi_direct(field, s), c(0.0, 0.0), 0.25, 64, 4)
            .expect("ξ is finite on |s| = 1/4");
        // real on the real axis
        for z in v.iter_mut() {
            z.im = 0.0;
        }
        v
    })
}

/// `ξ_K(s) = s(s−1) Λ_K(s)`, entire; `ξ(s)` for `ℚ`.
///
/// Inside `|s| < LOCAL_RADIUS` or `|s − 1| < LOCAL_RADIUS` a four-term
/// Taylor expansion about 0 is used (reflected through `s ↦ 1 − s` near 1).
pub fn xi_k(field: FieldSpec, s: Complex64) -> Result<Complex64> {
    if s.norm() < LOCAL_RADIUS {
        return Ok(horner(xi_local_coefficients(field), s));
    }
    if (s - 1.0).norm() < LOCAL_RADIUS {
        return Ok(horner(xi_local_coefficients(field), 1.0 - s));
    }
    xi_direct(field, s)
}

/// `ξ(s) = s(s−1) Λ(s)`.
pub fn xi(s: Complex64) -> Result<Complex64> {
    xi_k(FieldSpec::Rational, s)
}

/// Richardson estimate of `ξ_K'(0)/ξ_K(0)` and its error estimate.
pub fn xi_log_derivative_at_zero(field: FieldSpec) -> Result<(f64, f64)> {
    let (d, err) = richardson_derivative(
        |s| Ok(xi_k(field, s)?.ln()),
        c(0.0, 0.0),
        LOG_DERIVATIVE_STEP,
    )?;
    Ok((d.re, err))
}

/// `ln a*`, cached per field.
///
/// For `ℚ` this is the closed form `log 4π − γ`; for imaginary quadratic
/// fields it is `1 + ξ_K'(0)/ξ_K(0)` from the Richardson log-derivative.
pub fn log_astar(field: FieldSpec) -> f64 {
    static CACHE: [OnceLock<f64>; 10] = [const { OnceLock::new() }; 10];
    *CACHE[field_slot(field)].get_or_init(|| match field {
        FieldSpec::Rational => (4.0 * PI).ln() - EULER_GAMMA,
        _ => {
            let (d, _) = xi_log_derivative_at_zero(field).expect("ξ_K is finite near 0");
            1.0 + d
        }
    })
}

/// Truncated lattice sum `(1/w_K) Σ' |m + nω|^{−2s}` over `0 < |m + nω| ≤ radius`.
pub fn lattice_zeta_bruteforce(field: FieldSpec, s: Complex64, radius: f64) -> Result<Complex64> {
    let Some(d) = field.d() else {
        return Err(Error::Domain("lattice sum needs an imaginary quadratic field".into()));
    };
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("lattice sum diverges for Re s = {} <= 1", s.re)));
    }
    if radius < 10.0 {
        return Err(Error::Domain(format!("radius {radius} < 10")));
    }
    let d = d as i64;
    let half = d % 4 == 3;
    // 4|m + nω|² as an integer
    let norm4 = |m: i64, n: i64| -> i64 {
        if half {
            (2 * m + n) * (2 * m + n) + d * n * n
        } else {
            4 * (m * m + d * n * n)
        }
    };
    let r2x4 = (4.0 * radius * radius).floor() as i64;
    let n_max = (radius / (d as f64).sqrt() * if half { 2.0 } else { 1.0 }).ceil() as i64 + 1;
    let rows: Vec<Complex64> = (-n_max..=n_max)
        .into_par_iter()
        .map(|n| {
            let centre = if half { -n / 2 } else { 0 };
            let span = radius.ceil() as i64 + 2;
            let mut acc = Complex64::new(0.0, 0.0);
            for m in (centre - span)..=(centre + span) {
                let q = norm4(m, n);
                if q == 0 || q > r2x4 {
                    continue;
                }
                let ln_abs2 = (q as f64 / 4.0).ln();
                acc += (-s * ln_abs2).exp();
            }
            acc
        })
        .collect();
    let total: Complex64 = rows.iter().sum();
    finite("lattice_zeta_bruteforce", s, total / field.units() as f64)
}

/// Magnitude of the lattice tail beyond `radius`, from the area integral
/// `2π R^{2−2σ} / ((2σ−2) · covolume · w_K)`.
pub fn lattice_tail_estimate(field: FieldSpec, sigma: f64, radius: f64) -> f64 {
    let d = field.d().unwrap_or(1) as f64;
    let covolume = if field.d().map_or(false, |d| d % 4 == 3) {
        d.sqrt() / 2.0
    } else {
        d.sqrt()
    };
    2.0 * PI * radius.powf(2.0 - 2.0 * sigma) / ((2.0 * sigma - 2.0) * covolume * field.units() as f64)
}

/// Evaluation envelope for completed zeta functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaContext {
    accuracy: f64,
    max_im: f64,
}

/// Tightest accuracy the f64 evaluation path can honour.
pub const TIGHTEST_ACCURACY: f64 = 1e-13;
/// Largest `|Im s|` the Euler–Maclaurin path is validated for.
pub const MAX_IM: f64 = 200.0;

impl Default for ZetaContext {
    fn default() -> Self {
        Self {
            accuracy: 1e-11,
            max_im: 100.0,
        }
    }
}

impl ZetaContext {
    pub fn new(accuracy: f64, max_im: f64) -> Result<Self> {
        if !(accuracy >= TIGHTEST_ACCURACY) {
            return Err(Error::Unsupported(format!(
                "accuracy {accuracy:e} is tighter than {TIGHTEST_ACCURACY:e}"
            )));
        }
        if !(max_im > 0.0 && max_im <= MAX_IM) {
            return Err(Error::Unsupported(format!("|Im s| cap {max_im} outside (0, {MAX_IM}]")));
        }
        Ok(Self { accuracy, max_im })
    }

    pub fn accuracy(&self) -> f64 {
        self.accuracy
    }

    pub fn max_im(&self) -> f64 {
        self.max_im
    }

    fn check(&self, s: Complex64) -> Result<()> {
        if s.im.abs() > self.max_im {
            Err(Error::Domain(format!("|Im s| = {} exceeds the cap {}", s.im.abs(), self.max_im)))
        } else {
            Ok(())
        }
    }

    pub fn lambda_k(&self, field: FieldSpec, s: Complex64) -> Result<Complex64> {
        self.check(s)?;
        lambda_k(field, s)
    }

    pub fn xi_k(&self, field: FieldSpec, s: Complex64) -> Result<Complex64> {
        self.check(s)?;
        xi_k(field, s)
    }
}

/// Memo table for `Λ_K` keyed by the exact bit pattern of `s`.
///
/// Reads take a shared lock; a miss computes outside the lock and inserts
/// under the write lock, so cached and uncached calls return identical values.
#[derive(Debug, Default)]
pub struct LambdaCache {
    map: RwLock<HashMap<(FieldSpec, u64, u64), Complex64>>,
}

impl LambdaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lambda_k(&self, field: FieldSpec, s: Complex64) -> Result<Complex64> {
        let key = (field, s.re.to_bits(), s.im.to_bits());
        if let Some(v) = self.map.read().expect("cache lock poisoned").get(&key) {
            return Ok(*v);
        }
        let v = lambda_k(field, s)?;
        self.map.write().expect("cache lock poisoned").entry(key).or_insert(v);
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
