use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ScanConfig, Target};
use crate::error::{Error, Result};

/// Axis-parallel rectangle `[reLo, reHi] × [tLo, tHi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Rect {
    pub re_lo: f64,
    pub re_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl Rect {
    pub fn new(re_lo: f64, re_hi: f64, t_lo: f64, t_hi: f64) -> Result<Self> {
        let r = Self { re_lo, re_hi, t_lo, t_hi };
        if re_lo < re_hi && t_lo < t_hi && [re_lo, re_hi, t_lo, t_hi].iter().all(|x| x.is_finite()) {
            Ok(r)
        } else {
            Err(Error::Domain(format!("degenerate rectangle {r:?}")))
        }
    }

    /// Square of half-width `r` centred at `s`.
    pub fn around(s: Complex64, r: f64) -> Result<Self> {
        Self::new(s.re - r, s.re + r, s.im - r, s.im + r)
    }

    pub fn contains(&self, s: Complex64) -> bool {
        s.re > self.re_lo && s.re < self.re_hi && s.im > self.t_lo && s.im < self.t_hi
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_lo, self.t_lo),
            Complex64::new(self.re_hi, self.t_lo),
            Complex64::new(self.re_hi, self.t_hi),
            Complex64::new(self.re_lo, self.t_hi),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingOptions {
    /// Initial spacing of boundary samples.
    pub initial_step: f64,
    /// Largest accepted phase increment between neighbouring samples.
    pub max_phase_step: f64,
    /// Maximum number of bisections of an initial segment.
    pub max_depth: u32,
    /// `|f|/scale` below this on the boundary is reported as a near-zero.
    pub boundary_threshold: f64,
}

impl Default for WindingOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.05,
            max_phase_step: PI / 2.0,
            max_depth: 12,
            boundary_threshold: 1e-11,
        }
    }
}

fn sample<F>(f: &F, z: Complex64, opts: &WindingOptions) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<(Complex64, f64)>,
{
    let (g, scale) = f(z)?;
    let magnitude = g.norm() / scale;
    if !(magnitude >= opts.boundary_threshold) {
        return Err(Error::BoundaryNearZero { at: z, magnitude });
    }
    Ok(g)
}

fn segment_phase<F>(
    f: &F,
    (z0, g0): (Complex64, Complex64),
    (z1, g1): (Complex64, Complex64),
    depth: u32,
    opts: &WindingOptions,
) -> Result<f64>
where
    F: Fn(Complex64) -> Result<(Complex64, f64)>,
{
    let d = (g1 / g0).arg();
    if d.abs() <= opts.max_phase_step {
        return Ok(d);
    }
    if depth >= opts.max_depth {
        return Err(Error::PhaseStepExceeded { at: 0.5 * (z0 + z1), depth });
    }
    let zm = 0.5 * (z0 + z1);
    let gm = sample(f, zm, opts)?;
    Ok(segment_phase(f, (z0, g0), (zm, gm), depth + 1, opts)?
        + segment_phase(f, (zm, gm), (z1, g1), depth + 1, opts)?)
}

/// Winding number of `f` around the positively oriented boundary of `rect`.
///
/// `f` returns a value together with a positive scale; samples with
/// `|value|/scale` below the boundary threshold abort the count.
pub fn winding_number<F>(f: F, rect: &Rect, opts: &WindingOptions) -> Result<i64>
where
    F: Fn(Complex64) -> Result<(Complex64, f64)> + Sync,
{
    let c = rect.corners();
    let mut points = Vec::new();
    for k in 0..4 {
        let (z0, z1) = (c[k], c[(k + 1) % 4]);
        let n = ((z1 - z0).norm() / opts.initial_step).ceil().max(1.0) as usize;
        points.extend((0..n).map(|j| z0 + (z1 - z0) * (j as f64 / n as f64)));
    }
    let values = points
        .par_iter()
        .map(|&z| sample(&f, z, opts))
        .collect::<Result<Vec<Complex64>>>()?;
    let m = points.len();
    let total: f64 = (0..m)
        .into_par_iter()
        .map(|j| {
            let k = (j + 1) % m;
            segment_phase(&f, (points[j], values[j]), (points[k], values[k]), 0, opts)
        })
        .collect::<Result<Vec<f64>>>()?
        .iter()
        .sum();
    Ok((total / (2.0 * PI)).round() as i64)
}

/// Number of zeros of the entire normalisation of `target` inside `rect`.
pub fn count_rectangle(target: &Target, rect: &Rect, config: &ScanConfig) -> Result<usize> {
    let n = winding_number(|s| target.entire_scaled(s), rect, &config.winding())?;
    usize::try_from(n).map_err(|_| Error::Domain(format!("negative winding {n} for an entire function")))
}
