use std::fmt;

use crate::ComplexValue;

/// Errors raised by evaluation, zero localisation and verification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole of {function} at s = {}", fmt_complex(.at))]
    Pole {
        function: &'static str,
        at: ComplexValue,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by a vanishing denominator in {function} at s = {}", fmt_complex(.at))]
    Division {
        function: &'static str,
        at: ComplexValue,
    },
    #[error("non-finite value from {function} at s = {}", fmt_complex(.at))]
    NonFinite {
        function: &'static str,
        at: ComplexValue,
    },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("scan step {step} too coarse: zeros at t = {t1} and t = {t2}")]
    StepTooCoarse { step: f64, t1: f64, t2: f64 },
    #[error("|G| = {magnitude:e} (relative) on the contour near s = {}", fmt_complex(.at))]
    BoundaryNearZero { at: ComplexValue, magnitude: f64 },
    #[error("phase step not resolved after {depth} subdivisions near s = {}", fmt_complex(.at))]
    PhaseStepExceeded { at: ComplexValue, depth: u32 },
    #[error("refined zero near s = {} has relative residual {residual:e}", fmt_complex(.at))]
    Unrefined { at: ComplexValue, residual: f64 },
    #[error("{count} sign changes in the real window, expected at most one")]
    AmbiguousBracket { count: usize },
    #[error("ladder length mismatch between a = {a1} ({len1} zeros) and a = {a2} ({len2} zeros)")]
    LadderMismatch {
        a1: f64,
        len1: usize,
        a2: f64,
        len2: usize,
    },
    #[error(
        "Kronecker branch mismatch: selected branch gives {selected}, other branch {other}, spectral value {spectral}"
    )]
    ConventionMismatch {
        selected: f64,
        other: f64,
        spectral: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

fn fmt_complex(z: &ComplexValue) -> impl fmt::Display + '_ {
    struct D<'a>(&'a ComplexValue);
    impl fmt::Display for D<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0.im >= 0.0 {
                write!(f, "{}+{}i", self.0.re, self.0.im)
            } else {
                write!(f, "{}{}i", self.0.re, self.0.im)
            }
        }
    }
    D(z)
}

/// Returns `NonFinite` unless both components are finite.
pub(crate) fn finite(function: &'static str, at: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { function, at })
    }
}
