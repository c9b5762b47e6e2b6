//! Deciding whether a rational polynomial maps every natural number to a
//! positive integer.
//!
//! The procedure:
//!
//! 1. the zero polynomial is rejected at `n = 0`;
//! 2. integer values are checked on `[0, d]`, which is enough for all of ℕ;
//! 3. a non-positive leading coefficient means the polynomial is eventually
//!    non-positive, so a least non-positive value is searched for;
//! 4. otherwise every `∂ⁱF` has a positive leading coefficient and there is
//!    a least `k` with `∂ⁱF(k) > 0` for all `i ∈ [0, d]`;
//! 5. `F(k + m) = Σᵢ C(m, i) ∂ⁱF(k)` is then positive for every `m`, so only
//!    the prefix `F(0), …, F(k - 1)` remains to be checked.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::polynomial::{Integer, Polynomial, Rational};

/// Upper bound on the number of points visited by the witness and shift
/// searches. Valid inputs terminate long before it.
pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `F(witness)` is not an integer.
    NonInteger,
    /// `F(witness) <= 0`.
    NonPositive,
    /// `F` is identically zero (witness is always 0).
    ZeroPolynomial,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NonInteger => "NonInteger",
            Reason::NonPositive => "NonPositive",
            Reason::ZeroPolynomial => "ZeroPolynomial",
        }
    }
}

/// Evidence that `F` is a positive integer on ℕ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Least `k` with `∂ⁱF(k) > 0` for every `i ∈ [0, d]`.
    pub shift_k: u64,
    /// `∂⁰F(k), …, ∂ᵈF(k)`.
    pub difference_values_at_k: Vec<Integer>,
    /// `F(0), …, F(k - 1)`.
    pub prefix_values: Vec<Integer>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipVerdict {
    Member(Certificate),
    NotMember { witness_n: u64, reason: Reason },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            MembershipVerdict::Member(c) => Some(c),
            MembershipVerdict::NotMember { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("search exceeded the cap of {cap} points without terminating")]
    SearchCapExceeded { cap: u64 },
}

/// [`decide_membership_with_cap`] with [`DEFAULT_SEARCH_CAP`].
pub fn decide_membership(f: &Polynomial) -> Result<MembershipVerdict, MembershipError> {
    decide_membership_with_cap(f, DEFAULT_SEARCH_CAP)
}

pub fn decide_membership_with_cap(
    f: &Polynomial,
    cap: u64,
) -> Result<MembershipVerdict, MembershipError> {
    let Some(lead) = f.leading_coefficient() else {
        return Ok(MembershipVerdict::NotMember {
            witness_n: 0,
            reason: Reason::ZeroPolynomial,
        });
    };

    if let Some(n) = f.non_integer_witness() {
        return Ok(MembershipVerdict::NotMember {
            witness_n: n,
            reason: Reason::NonInteger,
        });
    }

    if !lead.is_positive() {
        let n = (0..cap)
            .find(|&n| !f.evaluate(&BigInt::from(n)).is_positive())
            .ok_or(MembershipError::SearchCapExceeded { cap })?;
        return Ok(MembershipVerdict::NotMember {
            witness_n: n,
            reason: Reason::NonPositive,
        });
    }

    let (shift_k, at_k) = least_positive_shift(f, cap)?;

    let mut prefix_values = Vec::with_capacity(shift_k as usize);
    for n in 0..shift_k {
        let v = f.evaluate(&BigInt::from(n));
        if !v.is_positive() {
            return Ok(MembershipVerdict::NotMember {
                witness_n: n,
                reason: Reason::NonPositive,
            });
        }
        prefix_values.push(v.to_integer());
    }

    Ok(MembershipVerdict::Member(Certificate {
        shift_k,
        difference_values_at_k: at_k.into_iter().map(|v| v.to_integer()).collect(),
        prefix_values,
    }))
}

/// Least `k < cap` with `∂ⁱF(k) > 0` for all `i ∈ [0, degree]`, together
/// with those values.
///
/// Terminates for every non-zero `F` with a positive leading coefficient.
/// The zero polynomial has no such `k`.
pub fn least_positive_shift(
    f: &Polynomial,
    cap: u64,
) -> Result<(u64, Vec<Rational>), MembershipError> {
    let Some(d) = f.degree() else {
        return Err(MembershipError::SearchCapExceeded { cap });
    };
    let mut table = Vec::with_capacity(d + 1);
    let mut p = f.clone();
    for _ in 0..=d {
        let next = p.difference();
        table.push(p);
        p = next;
    }

    'search: for k in 0..cap {
        let k_int = BigInt::from(k);
        let mut values = Vec::with_capacity(d + 1);
        // the highest differences are the first to turn positive; test them first
        for p in table.iter().rev() {
            let v = p.evaluate(&k_int);
            if !v.is_positive() {
                continue 'search;
            }
            values.push(v);
        }
        values.reverse();
        return Ok((k, values));
    }
    Err(MembershipError::SearchCapExceeded { cap })
}

/// `true` iff the leading coefficient is positive.
pub fn is_eventually_positive(f: &Polynomial) -> bool {
    f.leading_coefficient().is_some_and(|c| c.is_positive())
}

/// Checks that a verdict's claim holds at its witness point.
pub fn witness_holds(f: &Polynomial, witness_n: u64, reason: Reason) -> bool {
    let v = f.evaluate(&BigInt::from(witness_n));
    match reason {
        Reason::NonInteger => !v.is_integer(),
        Reason::NonPositive => v.is_integer() && !v.is_positive(),
        Reason::ZeroPolynomial => f.is_zero() && witness_n == 0 && v.is_zero(),
    }
}
