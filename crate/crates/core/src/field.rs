use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::QuadraticCharacter;

/// The nine `D` with `ℚ(√−D)` of class number one.
pub const CLASS_NUMBER_ONE: [u32; 9] = [1, 2, 3, 7, 11, 19, 43, 67, 163];

/// Arithmetic data of `ℚ` or of `ℚ(√−D)` with class number one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rational,
    ImaginaryQuadratic(u32),
}

impl FieldSpec {
    pub fn imaginary_quadratic(d: u32) -> Result<Self> {
        if CLASS_NUMBER_ONE.contains(&d) {
            Ok(FieldSpec::ImaginaryQuadratic(d))
        } else {
            Err(Error::Domain(format!(
                "D = {d} is not one of the class-number-one values {CLASS_NUMBER_ONE:?}"
            )))
        }
    }

    /// `ℚ` followed by the nine imaginary quadratic fields.
    pub fn all() -> impl Iterator<Item = FieldSpec> {
        std::iter::once(FieldSpec::Rational).chain(Self::imaginary())
    }

    pub fn imaginary() -> impl Iterator<Item = FieldSpec> {
        CLASS_NUMBER_ONE.into_iter().map(FieldSpec::ImaginaryQuadratic)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rational)
    }

    /// `D`, or `None` for `ℚ`.
    pub fn d(&self) -> Option<u32> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::ImaginaryQuadratic(d) => Some(*d),
        }
    }

    /// Field discriminant: `1` for `ℚ`, `−4D` for `D ≡ 1,2 (mod 4)`, `−D` for `D ≡ 3 (mod 4)`.
    pub fn discriminant(&self) -> i64 {
        match self {
            FieldSpec::Rational => 1,
            FieldSpec::ImaginaryQuadratic(d) => {
                let d = *d as i64;
                if d % 4 == 3 {
                    -d
                } else {
                    -4 * d
                }
            }
        }
    }

    /// Number of roots of unity in the ring of integers.
    pub fn units(&self) -> u32 {
        match self {
            FieldSpec::Rational => 2,
            FieldSpec::ImaginaryQuadratic(1) => 4,
            FieldSpec::ImaginaryQuadratic(3) => 6,
            FieldSpec::ImaginaryQuadratic(_) => 2,
        }
    }

    /// Generator `ω` with `O_K = ℤ + ℤω`.
    pub fn omega(&self) -> Option<Complex64> {
        self.d().map(|d| {
            let r = (d as f64).sqrt();
            if d % 4 == 3 {
                Complex64::new(0.5, 0.5 * r)
            } else {
                Complex64::new(0.0, r)
            }
        })
    }

    /// `ω² = a + bω` with integer `a, b`.
    pub fn omega_square_coordinates(&self) -> Option<(i64, i64)> {
        self.d().map(|d| {
            let d = d as i64;
            if d % 4 == 3 {
                // ω² = ω − (1 + D)/4
                (-(1 + d) / 4, 1)
            } else {
                (-d, 0)
            }
        })
    }

    /// Real part of the line carrying the non-real zeros.
    pub fn critical_re(&self) -> f64 {
        match self {
            FieldSpec::Rational => 0.5,
            FieldSpec::ImaginaryQuadratic(_) => 1.0,
        }
    }

    /// Open interval that can hold the real zero `ρ_a`.
    pub fn real_window(&self) -> (f64, f64) {
        match self {
            FieldSpec::Rational => (0.5, 1.0),
            FieldSpec::ImaginaryQuadratic(_) => (1.0, 2.0),
        }
    }

    /// `μ` at the centre of the critical line.
    pub fn center_eigenvalue(&self) -> f64 {
        let c = self.critical_re();
        c * c
    }

    /// `s(1−s)` for `ℚ`, `s(2−s)` otherwise.
    pub fn eigenvalue_of(&self, s: Complex64) -> Complex64 {
        s * (2.0 * self.critical_re() - s)
    }

    /// The character `χ_{d_K}`; `None` for `ℚ`.
    pub fn character(&self) -> Option<&'static QuadraticCharacter> {
        static CHARS: OnceLock<Vec<QuadraticCharacter>> = OnceLock::new();
        let d = self.d()?;
        let table = CHARS.get_or_init(|| {
            CLASS_NUMBER_ONE
                .iter()
                .map(|&d| {
                    QuadraticCharacter::new(FieldSpec::ImaginaryQuadratic(d).discriminant())
                        .expect("class-number-one discriminants are fundamental")
                })
                .collect()
        });
        let idx = CLASS_NUMBER_ONE.iter().position(|&x| x == d)?;
        Some(&table[idx])
    }

    /// `√|d_K| / 2π`, the base of the exponential factor in `Λ_K`.
    pub fn conductor_factor(&self) -> f64 {
        (self.discriminant().unsigned_abs() as f64).sqrt() / (2.0 * PI)
    }

    /// Short label: `Q` or the value of `D`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::ImaginaryQuadratic(d) => d.to_string(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let d: u32 = t
            .parse()
            .map_err(|_| Error::Domain(format!("unknown field '{s}'")))?;
        FieldSpec::imaginary_quadratic(d)
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.label()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminants_and_units() {
        let want = [(1, -4, 4), (2, -8, 2), (3, -3, 6), (7, -7, 2), (11, -11, 2), (19, -19, 2), (43, -43, 2), (67, -67, 2), (163, -163, 2)];
        for (d, disc, w) in want {
            let f = FieldSpec::imaginary_quadratic(d).unwrap();
            assert_eq!(f.discriminant(), disc);
            assert_eq!(f.units(), w);
            assert!(f.character().is_some());
        }
        assert!(FieldSpec::imaginary_quadratic(5).is_err());
        assert!(FieldSpec::Rational.character().is_none());
    }

    #[test]
    fn ring_closed_under_multiplication() {
        for f in FieldSpec::imaginary() {
            let w = f.omega().unwrap();
            let (a, b) = f.omega_square_coordinates().unwrap();
            let rhs = Complex64::new(a as f64, 0.0) + w * b as f64;
            assert!((w * w - rhs).norm() < 1e-12, "{f}");
        }
    }

    #[test]
    fn parse_and_serde_labels() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("163".parse::<FieldSpec>().unwrap(), FieldSpec::ImaginaryQuadratic(163));
        assert!("5".parse::<FieldSpec>().is_err());
        let j = serde_json::to_string(&FieldSpec::ImaginaryQuadratic(7)).unwrap();
        assert_eq!(j, "\"7\"");
    }
}
