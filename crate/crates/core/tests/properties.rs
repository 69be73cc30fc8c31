use proptest::prelude::*;

use qmoments::qkernel::{parse_ratfunc, poly_gcd, Monomial, Rational};
use qmoments::qseries::{q_binomial, TruncSeries};
use qmoments::{MPoly, RatFunc, Var};

/// Small Laurent polynomials in `q` and `z`.
fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-3i32..4, 0i32..3, -4i64..5), 0..5).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|(eq, ez, c)| {
            let mut m = Monomial::q(eq);
            m.set_exp(Var::Z, ez);
            (m, Rational::from_integer(c.into()))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| RatFunc::new(a, &b).unwrap())
}

/// Polynomials over `1 - q^k`, the shape of series coefficients in practice.
fn series_coeff() -> impl Strategy<Value = RatFunc> {
    (poly(), 0i32..4).prop_map(|(a, k)| {
        let den = &MPoly::one() - &MPoly::q_pow(k + 1);
        RatFunc::new(a, &den).unwrap()
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn exact_division(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let ag = &a * &g;
        let bg = &b * &g;
        let d = poly_gcd(&ag, &bg).unwrap();
        prop_assert!(ag.div_exact(&d).is_some());
        prop_assert!(bg.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&g).is_some() || g.div_exact(&d).is_some());
    }

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn canonical_text_round_trips(a in ratfunc()) {
        prop_assert_eq!(parse_ratfunc(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), z in small_rational()) {
        let at = |p: &MPoly| RatFunc::from_poly(p.clone()).eval_var(Var::Z, &z).unwrap();
        prop_assert_eq!(at(&(&a * &b)), &at(&a) * &at(&b));
        prop_assert_eq!(at(&(&a + &b)), &at(&a) + &at(&b));
    }

    #[test]
    fn canonical_form_is_unique(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        prop_assert_eq!(RatFunc::new(&c * &a, &(&c * &b)).unwrap(), RatFunc::new(a, &b).unwrap());
    }

    #[test]
    fn laurent_closure(a in ratfunc(), k in 0i32..=64) {
        prop_assert_eq!(a.mul_q_pow(-k).mul_q_pow(k), a);
    }

    #[test]
    fn limit_agrees_with_evaluation(a in poly(), b in nonzero_poly()) {
        let one = Rational::from_integer(1.into());
        let b1 = RatFunc::from_poly(b.clone()).eval_var(Var::Q, &one).unwrap();
        prop_assume!(!b1.is_zero());
        let f = RatFunc::new(a, &b).unwrap();
        prop_assert_eq!(f.limit_q1().unwrap(), f.eval_var(Var::Q, &one).unwrap());
    }

    #[test]
    fn series_inverse(coeffs in prop::collection::vec(series_coeff(), 1..6)) {
        let mut coeffs = coeffs;
        coeffs[0] = RatFunc::one();
        let a = TruncSeries::from_coeffs(coeffs);
        let prod = &a * &a.inverse().unwrap();
        prop_assert_eq!(prod, TruncSeries::one(a.order()));
    }

    #[test]
    fn gaussian_binomial_rules(n in 1i64..14, k in 0i64..14) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
        let lower = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).mul_monomial(&Monomial::q(k as i32));
        prop_assert_eq!(q_binomial(n, k), lower);
    }
}
