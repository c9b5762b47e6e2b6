#![allow(dead_code)]

use d0l_synth::{Polynomial, Rational};
use proptest::prelude::*;

/// Random rational polynomial of degree at most `max_degree`.
pub fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..=max_degree + 1).prop_map(|cs| {
        Polynomial::new(
            cs.into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    })
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rewrites a word of string letters `n` times. Shares no code with the
/// library's morphism machinery.
pub fn naive_expand(rules: &[(&str, &[&str])], axiom: &[&str], n: usize) -> Vec<String> {
    let mut word: Vec<String> = axiom.iter().map(|s| s.to_string()).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for letter in &word {
            let (_, image) = rules
                .iter()
                .find(|(l, _)| l == letter)
                .expect("rule for every letter");
            next.extend(image.iter().map(|s| s.to_string()));
        }
        word = next;
    }
    word
}
