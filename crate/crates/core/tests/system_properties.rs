use d0l_synth::{D0lSystem, LetterId, Word};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

fn word(size: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..size, 0..=max_len)
        .prop_map(|ids| ids.into_iter().map(LetterId).collect())
}

fn system() -> impl Strategy<Value = D0lSystem> {
    (1usize..=4).prop_flat_map(|size| {
        (prop::collection::vec(word(size, 3), size), word(size, 4)).prop_map(move |(rules, axiom)| {
            let alphabet = (0..size).map(|i| format!("l{i}")).collect();
            D0lSystem::new(alphabet, rules, axiom).unwrap()
        })
    })
}

fn system_and_words() -> impl Strategy<Value = (D0lSystem, Word, Word)> {
    system().prop_flat_map(|s| {
        let size = s.alphabet_size();
        (Just(s), word(size, 6), word(size, 6))
    })
}

/// π(w)·M computed from the matrix entries directly.
fn row_vector_times(v: &[BigUint], m: &[Vec<BigUint>]) -> Vec<BigUint> {
    (0..m.len())
        .map(|b| (0..v.len()).map(|a| &v[a] * &m[a][b]).sum())
        .collect()
}

proptest! {
    #[test]
    fn morphism_is_a_homomorphism((s, u, v) in system_and_words()) {
        let uv = u.concat(&v);
        let lhs = s.apply_morphism(&uv).unwrap();
        let rhs = s.apply_morphism(&u).unwrap().concat(&s.apply_morphism(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parikh_vector_evolves_by_incidence_matrix((s, w, _) in system_and_words()) {
        let image = s.apply_morphism(&w).unwrap();
        let expected = row_vector_times(&s.parikh_vector(&w).unwrap(), &s.incidence_matrix());
        prop_assert_eq!(s.parikh_vector(&image).unwrap(), expected);
    }

    #[test]
    fn matrix_and_expansion_agree(s in system()) {
        let mut words = s.expansions(100_000);
        for n in 0..=8u64 {
            match words.next().unwrap() {
                Ok(w) => prop_assert_eq!(BigUint::from(w.len()), s.growth_length(n)),
                Err(_) => break,
            }
        }
    }

    #[test]
    fn growth_table_matches_pointwise_lengths(s in system()) {
        let table = s.growth_table(10);
        for (n, len) in table.entries() {
            prop_assert_eq!(len, &s.growth_length(n));
        }
    }

    #[test]
    fn advancing_the_axiom_shifts_growth(s in system()) {
        let advanced = s.advance_axiom();
        let base = s.growth_table(21);
        let shifted = advanced.growth_table(20);
        prop_assert_eq!(&base.lengths()[1..], shifted.lengths());
    }

    #[test]
    fn vanishing_is_absorbing(s in system()) {
        let table = s.growth_table(40);
        if let Some(first_zero) = table.lengths().iter().position(Zero::is_zero) {
            for m in first_zero..=first_zero + 20 {
                prop_assert!(table.lengths()[m].is_zero());
            }
        }
    }

    #[test]
    fn expand_is_repeated_application(s in system(), n in 0u64..5) {
        let mut w = s.axiom().clone();
        for _ in 0..n {
            w = s.apply_morphism(&w).unwrap();
        }
        if w.len() <= 10_000 {
            prop_assert_eq!(s.expand(n, 10_000).unwrap(), w);
        }
    }
}

#[test]
fn large_growth_does_not_overflow() {
    // a -> a a doubles; 2^200 needs arbitrary precision
    let s = D0lSystem::from_names(&["a"], &[("a", vec!["a", "a"])], &["a"]).unwrap();
    assert_eq!(s.growth_length(200), BigUint::from(2u32).pow(200));
}
