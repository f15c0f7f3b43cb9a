//! Constant terms of Eisenstein series for `PSL(2, ℤ)` and for
//! `PSL(2, O_K)` with `K = ℚ(√−D)` of class number one.
//!
//! The crate evaluates the completed zeta functions and the constant-term
//! Dirichlet series `φ(a, s)`, locates and certifies their zeros (scan of a
//! real function on the critical line, argument-principle counting, real-zero
//! bisection), and computes the critical truncation heights `a*` by three
//! independent routes.

pub mod calculus;
pub mod constant_term;
pub mod error;
pub mod field;
pub mod special;
pub mod spectral;
pub mod verify;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
pub use field::FieldSpec;

/// Complex numbers throughout the crate.
pub type ComplexValue = num_complex::Complex64;
