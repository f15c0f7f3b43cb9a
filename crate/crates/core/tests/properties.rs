use num_complex::Complex64;
use proptest::prelude::*;

use eisenzero::constant_term::{c_scatter, ck_scatter, entire_phi, hecke_factor, phi, HeckeSpec};
use eisenzero::field::{FieldSpec, CLASS_NUMBER_ONE};
use eisenzero::zeta::{lambda, lambda_k};

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        prop::sample::select(CLASS_NUMBER_ONE.to_vec()).prop_map(FieldSpec::ImaginaryQuadratic),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn completed_zeta_is_symmetric(f in field(), x in -1.5f64..2.5, y in 0.3f64..30.0) {
        let s = Complex64::new(x, y);
        let a = lambda_k(f, s).unwrap();
        let b = lambda_k(f, 1.0 - s).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn completed_zeta_is_real_on_real_axis(x in 1.05f64..6.0) {
        let v = lambda(Complex64::new(x, 0.0)).unwrap();
        prop_assert!(v.im.abs() <= 1e-15 * v.re.abs() && v.re > 0.0);
    }

    #[test]
    fn constant_term_is_symmetric(f in field(), a in 1.0f64..20.0, x in -0.5f64..2.5, y in 0.3f64..20.0) {
        let s = Complex64::new(x, y);
        let mirror = 2.0 * f.critical_re() - s;
        let p = phi(f, a, s).unwrap();
        let q = phi(f, a, mirror).unwrap();
        prop_assert!((p - q).norm() <= 1e-9 * p.norm());
    }

    #[test]
    fn entire_form_conjugate_symmetric(f in field(), a in 1.0f64..20.0, x in -0.5f64..2.5, y in 0.0f64..20.0) {
        let s = Complex64::new(x, y);
        let g = entire_phi(f, a, s).unwrap();
        let h = entire_phi(f, a, s.conj()).unwrap();
        prop_assert!((g.conj() - h).norm() <= 1e-12 * g.norm());
    }

    #[test]
    fn scattering_unitary_on_line(d in prop::sample::select(CLASS_NUMBER_ONE.to_vec()), t in -30.0f64..30.0) {
        prop_assert!((c_scatter(Complex64::new(0.5, t)).unwrap().norm() - 1.0).abs() < 1e-10);
        let f = FieldSpec::ImaginaryQuadratic(d);
        prop_assert!((ck_scatter(f, Complex64::new(1.0, t)).unwrap().norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn hecke_factor_real_on_line(p in prop::sample::select(vec![2u32, 3, 5, 7]), sign in prop::sample::select(vec![1i8, -1]), a in 1.0f64..4.0, t in 0.2f64..20.0) {
        let spec = HeckeSpec::new(p, sign, a).unwrap();
        let v = hecke_factor(&spec, Complex64::new(0.5, t)).unwrap();
        prop_assert!(v.im.abs() <= 1e-10 * v.norm());
    }
}
