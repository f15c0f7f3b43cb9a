//! Zeros of the constant-term functions: sign-change scanning on the
//! critical line, argument-principle counting on rectangles, bisection for
//! the real zero and simplicity certificates.

mod certify;
mod line;
mod real;
mod winding;

pub use certify::{certify_all, certify_simple, certify_simple_with, certify_target, derivative_ratio, Certificate};
pub use line::{
    line_argument, line_function, line_value_with, scan_line, scan_line_adaptive, scan_line_adaptive_with,
    scan_line_with,
};
pub use real::find_real_zero;
pub use winding::{count_rectangle, winding_number, Rect, WindingOptions};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constant_term::{
    entire_phi, hecke_factor, hecke_scale, phi, phi_scale, HeckeSpec,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroKind {
    #[serde(rename = "line")]
    OnLine,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SignChange,
    Bisection,
}

/// A refined zero. `residual` is `|φ(s)|` relative to the sum of the
/// moduli of the two terms of `φ`, which stays meaningful at heights where
/// both terms are exponentially small.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub field: FieldSpec,
    pub a: f64,
    pub kind: ZeroKind,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub simple: bool,
    pub mu: f64,
    pub method: Method,
}

impl ZeroRecord {
    pub fn s(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanConfig {
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
    pub refine_tol: f64,
    pub residual_tol: f64,
    pub winding_max_phase_step: f64,
    pub exclusion_radius: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            t_min: 0.05,
            t_max: 30.0,
            step: 0.05,
            refine_tol: 1e-12,
            residual_tol: 1e-9,
            winding_max_phase_step: std::f64::consts::FRAC_PI_2,
            exclusion_radius: 0.05,
        }
    }
}

impl ScanConfig {
    pub fn with_range(t_min: f64, t_max: f64) -> Self {
        Self { t_min, t_max, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.step > 0.0
            && self.exclusion_radius > 0.0
            && self.t_min >= self.exclusion_radius
            && self.t_max >= self.t_min
            && self.refine_tol > 0.0
            && self.residual_tol > 0.0
            && self.winding_max_phase_step > 0.0
            && self.winding_max_phase_step < std::f64::consts::PI;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid scan configuration {self:?}")))
        }
    }

    pub fn winding(&self) -> WindingOptions {
        WindingOptions {
            max_phase_step: self.winding_max_phase_step,
            boundary_threshold: 10.0 * self.refine_tol,
            ..WindingOptions::default()
        }
    }
}

/// A function whose zeros are sought: `φ` for a field, or one sign factor
/// of the `Γ₀(p)` determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    Field { field: FieldSpec, a: f64 },
    Hecke(HeckeSpec),
}

impl Target {
    pub fn field(field: FieldSpec, a: f64) -> Result<Self> {
        if !(a >= 1.0 && a.is_finite()) {
            return Err(Error::Domain(format!("truncation height a = {a} must be >= 1")));
        }
        Ok(Target::Field { field, a })
    }

    /// Field used for labelling records; `Γ₀(p)` zeros live over `ℚ`.
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            Target::Field { field, .. } => *field,
            Target::Hecke(_) => FieldSpec::Rational,
        }
    }

    pub fn height(&self) -> f64 {
        match self {
            Target::Field { a, .. } => *a,
            Target::Hecke(h) => h.a,
        }
    }

    pub fn center(&self) -> f64 {
        self.field_spec().critical_re()
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        match self {
            Target::Field { field, a } => phi(*field, *a, s),
            Target::Hecke(h) => hecke_factor(h, s),
        }
    }

    /// Sum of the moduli of the two terms.
    pub fn scale(&self, s: Complex64) -> Result<f64> {
        match self {
            Target::Field { field, a } => phi_scale(*field, *a, s),
            Target::Hecke(h) => hecke_scale(h, s),
        }
    }

    /// `|φ(s)| / scale(s)`.
    pub fn relative_residual(&self, s: Complex64) -> Result<f64> {
        Ok(self.eval(s)?.norm() / self.scale(s)?)
    }

    /// Entire normalisation: `s(s−1)φ₀`, `s(s−2)φ_K`, or `s(s−1)f` for
    /// a Hecke factor (whose singularity at 1/2 is removable).
    pub fn entire(&self, s: Complex64) -> Result<Complex64> {
        match self {
            Target::Field { field, a } => entire_phi(*field, *a, s),
            Target::Hecke(h) => Ok(s * (s - 1.0) * hecke_factor(h, s)?),
        }
    }

    /// The entire normalisation together with its natural scale.
    pub fn entire_scaled(&self, s: Complex64) -> Result<(Complex64, f64)> {
        let g = self.entire(s)?;
        let m = s * (s - 2.0 * self.center());
        Ok((g, m.norm() * self.scale(s)?))
    }

    /// Real function on the critical line with the same zeros as `φ` there.
    pub fn line_value(&self, t: f64) -> Result<f64> {
        match self {
            Target::Field { field, a } => line::line_value(*field, *a, t),
            Target::Hecke(h) => Ok(hecke_factor(h, Complex64::new(0.5, t))?.re),
        }
    }

    pub(crate) fn record(&self, kind: ZeroKind, s: Complex64, method: Method) -> Result<ZeroRecord> {
        let residual = self.relative_residual(s)?;
        let field = self.field_spec();
        Ok(ZeroRecord {
            field,
            a: self.height(),
            kind,
            re: s.re,
            im: s.im,
            residual,
            simple: false,
            mu: field.eigenvalue_of(s).re,
            method,
        })
    }
}
