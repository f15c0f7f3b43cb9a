//! Special-function layer: complex log-gamma, Hurwitz zeta, Kronecker
//! symbols, Dirichlet L-functions of quadratic characters and the
//! Dedekind eta function.
//!
//! Everything here works in `f64` complex arithmetic with explicit
//! truncation bounds; no arbitrary precision is used.

mod bernoulli;
mod dirichlet;
mod eta;
mod gamma;
mod hurwitz;
mod kronecker;

pub use dirichlet::{dirichlet_l, QuadraticCharacter};
pub use eta::{dedekind_eta, dedekind_eta_series};
pub use gamma::{gamma, log_gamma};
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub use kronecker::kronecker_symbol;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
