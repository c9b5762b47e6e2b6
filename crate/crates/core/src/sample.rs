//! Random polynomials for property tests and benchmarks.

use num_bigint::BigInt;
use rand::Rng;

use crate::polynomial::{Polynomial, Rational};

/// `Σ fᵢ C(x, i)` with degree `d ≤ 5` and `fᵢ ∈ [1, 9]`.
///
/// Because `∂ⁱ C(x, j) = C(x, j - i)`, the differences at 0 are exactly the
/// chosen `fᵢ`, so these members never need a shift.
pub fn restricted_member<R: Rng + ?Sized>(rng: &mut R) -> Polynomial {
    let d = rng.gen_range(0..=5);
    let f: Vec<i64> = (0..=d).map(|_| rng.gen_range(1..=9)).collect();
    from_binomial_basis(&f)
}

/// `Σ fᵢ C(x, i)`.
pub fn from_binomial_basis(f: &[i64]) -> Polynomial {
    f.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &fi)| {
        &acc + &Polynomial::binomial(i).scale(&Rational::from_integer(fi.into()))
    })
}

/// `(x - m)^(2j) + c` with `m ∈ [1, 4]`, `j ∈ [1, 2]`, `c ∈ [1, 9]`.
///
/// Always positive on ℕ, but `∂F(0) < 0`, so a shift `k ≥ 1` is required.
pub fn shifted_member<R: Rng + ?Sized>(rng: &mut R) -> Polynomial {
    let m: i64 = rng.gen_range(1..=4);
    let j: u32 = rng.gen_range(1..=2);
    let c: i64 = rng.gen_range(1..=9);
    &Polynomial::from_i64s(&[-m, 1]).pow(2 * j) + &Polynomial::from_i64s(&[c])
}

/// Degree at most `max_degree`; each coefficient is `p/q` with `q ∈ [1, max_den]`
/// and `|p/q| ≤ bound`.
pub fn rational_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: usize,
    bound: i64,
    max_den: i64,
) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    let coeffs = (0..=d)
        .map(|_| {
            let den = rng.gen_range(1..=max_den);
            let num = rng.gen_range(-bound * den..=bound * den);
            Rational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    Polynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand::rngs::StdRng;

    #[test]
    fn binomial_basis_differences() {
        let g = from_binomial_basis(&[3, 1, 4, 1]);
        for (i, fi) in [3, 1, 4, 1].into_iter().enumerate() {
            assert_eq!(g.iterated_difference(i).eval_at(0), Rational::from_integer(fi.into()));
        }
    }

    #[test]
    fn shifted_family_has_negative_first_difference() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let f = shifted_member(&mut rng);
            assert!(f.difference().eval_at(0).is_negative());
        }
    }

    #[test]
    fn rational_bounds() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..50 {
            let p = rational_polynomial(&mut rng, 5, 5, 4);
            assert!(p.degree().is_none_or(|d| d <= 5));
            for c in p.coeffs() {
                assert!(c.abs() <= Rational::from_integer(5.into()));
                assert!(*c.denom() <= BigInt::from(4));
            }
        }
    }
}
