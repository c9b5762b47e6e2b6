mod common;

use common::{polynomial, q};
use d0l_synth::{Polynomial, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #[test]
    fn difference_drops_degree_and_scales_leading_coefficient(f in polynomial(8)) {
        let df = f.difference();
        match f.degree() {
            None | Some(0) => prop_assert!(df.is_zero()),
            Some(d) => {
                prop_assert_eq!(df.degree(), Some(d - 1));
                let expected = f.leading_coefficient().unwrap() * q(d as i64);
                prop_assert_eq!(df.leading_coefficient(), Some(&expected));
            }
        }
    }

    #[test]
    fn telescoping_sum(f in polynomial(6)) {
        let df = f.difference();
        let mut acc = f.eval_at(0);
        for n in 0..=50i64 {
            prop_assert_eq!(&acc, &f.eval_at(n));
            acc += df.eval_at(n);
        }
    }

    #[test]
    fn binomial_formula_matches_iterated_difference(f in polynomial(6)) {
        for i in 0..=6 {
            let di = f.iterated_difference(i);
            for n in 0..=10i64 {
                prop_assert_eq!(
                    f.iterated_difference_direct(i, &BigInt::from(n)),
                    di.eval_at(n)
                );
            }
        }
    }

    #[test]
    fn shift_inverts(f in polynomial(6), k in -5i64..=5) {
        let k = BigInt::from(k);
        let g = f.shift_argument(&k);
        prop_assert_eq!(g.shift_argument(&-&k), f.clone());
        for n in -3i64..=3 {
            prop_assert_eq!(g.eval_at(n), f.evaluate(&(&k + n)));
        }
    }

    #[test]
    fn ring_operations_agree_with_evaluation(f in polynomial(4), g in polynomial(4), n in -10i64..=10) {
        prop_assert_eq!((&f + &g).eval_at(n), f.eval_at(n) + g.eval_at(n));
        prop_assert_eq!((&f - &g).eval_at(n), f.eval_at(n) - g.eval_at(n));
        prop_assert_eq!((&f * &g).eval_at(n), f.eval_at(n) * g.eval_at(n));
    }

    #[test]
    fn integer_valuedness_on_a_window_extends(f in polynomial(5)) {
        // integer on [0, d] iff integer on a wider window of integers
        let wide = (-15i64..=15).all(|n| f.eval_at(n).is_integer());
        prop_assert_eq!(f.is_integer_valued(), wide);
    }
}

#[test]
fn binomial_basis_is_integer_valued_with_fractional_coefficients() {
    let c3 = Polynomial::binomial(3);
    assert!(c3.coeffs().iter().any(|c| !c.is_integer()));
    assert!(c3.is_integer_valued());
    assert_eq!(c3.iterated_difference(3), Polynomial::one());
    assert!(c3.iterated_difference(4).is_zero());
    assert_eq!(c3.eval_at(-1), Rational::new(BigInt::from(-1), BigInt::from(1)));
}
