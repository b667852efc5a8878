use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use square_ice::combinat::rat;
use square_ice::exact::{LaurentPoly, QuadScalar, Radicand, TaylorSeries, TrigKind};
use square_ice::moments::SpecialPoint;
use square_ice::refined3;

fn radicand() -> impl Strategy<Value = Radicand> {
    prop::sample::select(Radicand::ALL.to_vec())
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn scalar_in(rad: Radicand) -> impl Strategy<Value = QuadScalar> {
    (small_rational(), small_rational()).prop_map(move |(a, b)| QuadScalar::new(a, b, rad))
}

fn scalar_triple() -> impl Strategy<Value = (QuadScalar, QuadScalar, QuadScalar)> {
    radicand().prop_flat_map(|rad| (scalar_in(rad), scalar_in(rad), scalar_in(rad)))
}

fn laurent_in(rad: Radicand) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, scalar_in(rad)), 0..5)
        .prop_map(move |terms| LaurentPoly::from_terms(rad, terms).unwrap())
}

fn series_pair() -> impl Strategy<Value = (TaylorSeries, TaylorSeries)> {
    radicand().prop_flat_map(|rad| {
        let coeffs = || prop::collection::vec(scalar_in(rad), 6);
        (coeffs(), coeffs()).prop_map(move |(a, b)| {
            (
                TaylorSeries::from_coeffs(a, 5, rad).unwrap(),
                TaylorSeries::from_coeffs(b, 5, rad).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in scalar_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn series_division_inverts_multiplication((a, b) in series_pair()) {
        let product = a.mul(&b, 5).unwrap();
        prop_assert_eq!(&product, &b.mul(&a, 5).unwrap());
        if !b.coeffs()[0].is_zero() {
            prop_assert_eq!(product.div(&b, 5).unwrap(), a);
        }
    }

    #[test]
    fn laurent_inversion_is_an_involutive_homomorphism(
        (p, q) in radicand().prop_flat_map(|rad| (laurent_in(rad), laurent_in(rad)))
    ) {
        prop_assert_eq!(p.invert_variable().invert_variable(), p.clone());
        prop_assert_eq!(p.mul(&q).invert_variable(), p.invert_variable().mul(&q.invert_variable()));
        prop_assert_eq!(p.add(&q).invert_variable(), p.invert_variable().add(&q.invert_variable()));
        let two = QuadScalar::from_integer(2, p.radicand());
        let half = QuadScalar::ratio(1, 2, p.radicand());
        prop_assert_eq!(p.invert_variable().evaluate_at(&two).unwrap(), p.evaluate_at(&half).unwrap());
        prop_assert_eq!(
            p.mul(&q).evaluate_at(&two).unwrap(),
            &p.evaluate_at(&two).unwrap() * &q.evaluate_at(&two).unwrap()
        );
    }

    #[test]
    fn sine_derivatives_cycle(point in prop::sample::select(SpecialPoint::ALL.to_vec()), j in 0usize..12) {
        let (s, c) = (point.sin_eta(), point.cos_eta());
        let series = TaylorSeries::trig(TrigKind::Sin, &s, &c, 12).unwrap();
        let expected = match j % 4 {
            0 => s.clone(),
            1 => c.clone(),
            2 => -&s,
            _ => -&c,
        };
        prop_assert_eq!(series.derivative_at_zero(j).unwrap(), expected);
    }

    #[test]
    fn b_coefficients_are_normalized_palindromes(m in 0usize..=10) {
        let b = refined3::b_closed_form(m);
        prop_assert!(b.check_invariants().is_ok());
        for r in -(m as i64) - 2..=m as i64 + 2 {
            prop_assert!(refined3::five_term_residual(&b, r).is_zero());
        }
    }

    #[test]
    fn gamma_closed_form_solves_recurrence(m in 0usize..=10) {
        let gamma = refined3::gamma_sequence(m);
        prop_assert!(refined3::gamma_residuals(m, &gamma).iter().all(Zero::is_zero));
    }

    #[test]
    fn f_and_g_are_antisymmetric(m in 0usize..=8) {
        let (f, g, _) = refined3::fgh_polys(m);
        prop_assert_eq!(f.invert_variable(), f.neg());
        prop_assert_eq!(g.invert_variable(), g.neg());
    }
}
