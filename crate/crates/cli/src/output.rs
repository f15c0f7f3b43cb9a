use std::io::Write;

use anyhow::Result;
use eisenzero::spectral::Trajectory;
use eisenzero::zeros::ZeroRecord;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `x` with 15 significant digits, trailing zeros dropped.
pub fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let s = format!("{x:.14e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn complex(z: Complex64) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{} {sign} {}i", sig15(z.re), sig15(z.im.abs()))
}

pub fn write_json_lines<W: Write>(out: &mut W, zeros: &[ZeroRecord]) -> Result<()> {
    for z in zeros {
        serde_json::to_writer(&mut *out, z)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_zeros_csv<W: Write>(out: W, zeros: &[ZeroRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for z in zeros {
        w.serialize(z)?;
    }
    w.flush()?;
    Ok(())
}

/// One CSV row of a trajectory; the ladder is `;`-separated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub a: f64,
    pub rho: Option<f64>,
    pub line_zeros: usize,
    pub t_ladder: String,
}

pub fn trajectory_rows(t: &Trajectory) -> Vec<TrajectoryRow> {
    t.a_grid
        .iter()
        .zip(&t.rho)
        .zip(&t.t_ladder)
        .map(|((&a, &rho), ladder)| TrajectoryRow {
            a,
            rho,
            line_zeros: ladder.len(),
            t_ladder: ladder.iter().map(f64::to_string).collect::<Vec<_>>().join(";"),
        })
        .collect()
}

pub fn write_trajectory_csv<W: Write>(out: W, t: &Trajectory) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in trajectory_rows(t) {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig15(-1.0), "-1");
        assert_eq!(sig15(0.5), "0.5");
        assert_eq!(sig15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(sig15(7.055507955448183), "7.05550795544818");
        assert_eq!(sig15(1.5e-20), "1.5e-20");
        assert_eq!(sig15(123456789012345678.0), "1.23456789012346e17");
        let x = 2.718281828459045;
        assert!((sig15(x).parse::<f64>().unwrap() - x).abs() < 1e-14 * x);
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(complex(Complex64::new(-1.0, 0.0)), "-1 + 0i");
        assert_eq!(complex(Complex64::new(0.25, -2.0)), "0.25 - 2i");
    }
}
