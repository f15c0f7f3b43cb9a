//! Small numerical-analysis helpers shared across modules.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;

/// Central difference with one Richardson step on `h, h/2`, repeated on
/// `h/2, h/4`. Returns the finer extrapolant and the gap between the two
/// extrapolants as an error estimate.
pub fn richardson_derivative<F>(f: F, x: Complex64, h: f64) -> Result<(Complex64, f64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let d = |h: f64| -> Result<Complex64> { Ok((f(x + h)? - f(x - h)?) / (2.0 * h)) };
    let d1 = d(h)?;
    let d2 = d(h / 2.0)?;
    let d3 = d(h / 4.0)?;
    let r1 = (4.0 * d2 - d1) / 3.0;
    let r2 = (4.0 * d3 - d2) / 3.0;
    Ok((r2, (r2 - r1).norm()))
}

/// First `n` Taylor coefficients of an analytic `f` at `center`, from the
/// trapezoidal rule on the circle of radius `radius` with `points` nodes.
pub fn taylor_coefficients<F>(f: F, center: Complex64, radius: f64, points: usize, n: usize) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let samples: Vec<Complex64> = (0..points)
        .map(|j| {
            let th = 2.0 * PI * j as f64 / points as f64;
            f(center + Complex64::from_polar(radius, th))
        })
        .collect::<Result<_>>()?;
    Ok((0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, v) in samples.iter().enumerate() {
                let th = 2.0 * PI * (j * k) as f64 / points as f64;
                acc += v * Complex64::from_polar(1.0, -th);
            }
            acc / (points as f64 * radius.powi(k as i32))
        })
        .collect())
}

/// Value at `center` of a function analytic on the closed disc, as the
/// mean over the boundary circle. Works through removable singularities at
/// the centre since `f` is never evaluated there.
pub fn circle_mean<F>(f: F, center: Complex64, radius: f64, points: usize) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..points {
        let th = 2.0 * PI * (j as f64 + 0.5) / points as f64;
        acc += f(center + Complex64::from_polar(radius, th))?;
    }
    Ok(acc / points as f64)
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}
