//! Building a D0L-system whose growth function is a given polynomial.
//!
//! Three pieces:
//!
//! * constants `c`: one letter mapped to itself, axiom `a0^c`;
//! * restricted polynomials, where every `fᵢ = ∂ⁱG(0)` is positive: letters
//!   `a0 … ad`, level words `xᵢ = a0^(f_{d-i} - 1) aᵢ`, rules `a0 → a0` and
//!   `aᵢ → aᵢ x_{i-1}`. Each `aᵢ → aᵢ x_{i-1}` accumulates the iterates of
//!   the level below, so `|σⁿ(x_{d-i})| = ∂ⁱG(n)`;
//! * general members of the class, shifted by the least `k` that makes the
//!   differences positive and then delayed by a chain `e, b1 … bk` that
//!   emits `e^(F(n) - 1) b_{n+1}` for the first `k` steps.
//!
//! Letter names are fixed: `a0 … ad` for the core, `e` for the erasing
//! letter, `b1 … bk` for the delay chain.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::membership::{
    decide_membership_with_cap, is_eventually_positive, least_positive_shift, MembershipError,
    MembershipVerdict, DEFAULT_SEARCH_CAP,
};
use crate::polynomial::{Integer, Polynomial, Rational};
use crate::system::{D0lError, D0lSystem, LetterId, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("constant {0} is not a positive integer")]
    InvalidConstant(Integer),
    #[error("∂^{index} at 0 is {value}, which is not a positive integer")]
    PreconditionViolated { index: usize, value: Rational },
    #[error("polynomial is zero or has a non-positive leading coefficient")]
    NotEventuallyPositive,
    #[error("polynomial does not map ℕ to the positive integers: {0:?}")]
    NotInF(MembershipVerdict),
    #[error("repetition count {0} does not fit in memory")]
    TooLarge(Integer),
    #[error(transparent)]
    Search(#[from] MembershipError),
    #[error(transparent)]
    System(#[from] D0lError),
}

/// Everything produced while synthesizing a system for `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisReport {
    pub input: Polynomial,
    pub degree: usize,
    pub shift_k: u64,
    /// `fᵢ = ∂ⁱG(0)` for `G(x) = F(x + k)`.
    pub difference_values: Vec<Integer>,
    pub system: D0lSystem,
    /// `x0 … xd`, as words of `system`; `|σⁿ(x_{d-i})| = ∂ⁱG(n)`.
    pub level_axioms: Vec<Word>,
    /// `F(0) … F(k - 1)`.
    pub prefix_values: Vec<Integer>,
}

fn repetitions(count: &Integer) -> Result<usize, SynthesisError> {
    count.to_usize().ok_or_else(|| SynthesisError::TooLarge(count.clone()))
}

fn core_letter_names(d: usize) -> Vec<String> {
    (0..=d).map(|i| format!("a{i}")).collect()
}

/// Identity morphism on `{a0}` with axiom `a0^c`.
pub fn synthesize_constant(c: &Integer) -> Result<D0lSystem, SynthesisError> {
    if !c.is_positive() {
        return Err(SynthesisError::InvalidConstant(c.clone()));
    }
    let a0 = LetterId(0);
    let system = D0lSystem::new(
        core_letter_names(0),
        vec![Word::repeat(a0, 1)],
        Word::repeat(a0, repetitions(c)?),
    )?;
    Ok(system)
}

/// Nested integration gadgets for `G` with every `∂ⁱG(0)` a positive integer.
///
/// Returns the system (axiom `x_d`) and the level words `x0 … xd`.
pub fn synthesize_restricted(g: &Polynomial) -> Result<(D0lSystem, Vec<Word>), SynthesisError> {
    let Some(d) = g.degree() else {
        return Err(SynthesisError::PreconditionViolated { index: 0, value: Rational::default() });
    };
    let zero = BigInt::default();
    let mut f = Vec::with_capacity(d + 1);
    let mut p = g.clone();
    for i in 0..=d {
        let v = p.evaluate(&zero);
        if !v.is_integer() || !v.is_positive() {
            return Err(SynthesisError::PreconditionViolated { index: i, value: v });
        }
        f.push(v.to_integer());
        p = p.difference();
    }

    let a = |i: usize| LetterId(i);
    let levels = (0..=d)
        .map(|i| {
            let mut x = Word::repeat(a(0), repetitions(&(&f[d - i] - 1u32))?);
            x.push(a(i));
            Ok(x)
        })
        .collect::<Result<Vec<_>, SynthesisError>>()?;

    let mut rules = Vec::with_capacity(d + 1);
    rules.push(Word::repeat(a(0), 1));
    for i in 1..=d {
        rules.push(Word::repeat(a(i), 1).concat(&levels[i - 1]));
    }
    let system = D0lSystem::new(core_letter_names(d), rules, levels[d].clone())?;
    Ok((system, levels))
}

/// Least `k` with `∂ⁱF(k) > 0` for every `i ∈ [0, degree]`.
pub fn compute_shift(f: &Polynomial) -> Result<u64, SynthesisError> {
    compute_shift_with_cap(f, DEFAULT_SEARCH_CAP)
}

pub fn compute_shift_with_cap(f: &Polynomial, cap: u64) -> Result<u64, SynthesisError> {
    if !is_eventually_positive(f) {
        return Err(SynthesisError::NotEventuallyPositive);
    }
    Ok(least_positive_shift(f, cap)?.0)
}

/// A D0L-system with growth function exactly `F`, for any `F` that maps ℕ
/// to the positive integers.
pub fn synthesize_general(f: &Polynomial) -> Result<SynthesisReport, SynthesisError> {
    synthesize_general_with_cap(f, DEFAULT_SEARCH_CAP)
}

pub fn synthesize_general_with_cap(
    f: &Polynomial,
    cap: u64,
) -> Result<SynthesisReport, SynthesisError> {
    let cert = match decide_membership_with_cap(f, cap)? {
        MembershipVerdict::Member(cert) => cert,
        rejected => return Err(SynthesisError::NotInF(rejected)),
    };
    let degree = f.degree().expect("members are non-zero");
    let k = cert.shift_k;

    let (core, core_levels) = if degree == 0 {
        let system = synthesize_constant(&cert.difference_values_at_k[0])?;
        let levels = vec![system.axiom().clone()];
        (system, levels)
    } else {
        synthesize_restricted(&f.shift_argument(&BigInt::from(k)))?
    };

    let report = |system, level_axioms| SynthesisReport {
        input: f.clone(),
        degree,
        shift_k: k,
        difference_values: cert.difference_values_at_k.clone(),
        system,
        level_axioms,
        prefix_values: cert.prefix_values.clone(),
    };

    if k == 0 {
        return Ok(report(core, core_levels));
    }

    // e = 0, b_i = i, core letter a_j = k + 1 + j
    let k = usize::try_from(k).map_err(|_| SynthesisError::TooLarge(BigInt::from(k)))?;
    let offset = k + 1;
    let e = LetterId(0);
    let lift = |w: &Word| w.relabel(|l| LetterId(l.0 + offset));

    let mut alphabet = Vec::with_capacity(offset + core.alphabet_size());
    alphabet.push("e".to_owned());
    alphabet.extend((1..=k).map(|i| format!("b{i}")));
    alphabet.extend(core.alphabet().iter().cloned());

    let pad = |value: &Integer| -> Result<Word, SynthesisError> {
        Ok(Word::repeat(e, repetitions(&(value - BigInt::one()))?))
    };

    let mut rules = Vec::with_capacity(alphabet.len());
    rules.push(Word::empty());
    for i in 1..k {
        let mut image = pad(&cert.prefix_values[i])?;
        image.push(LetterId(i + 1));
        rules.push(image);
    }
    rules.push(lift(core.axiom()));
    rules.extend(core.rules().iter().map(lift));

    let mut axiom = pad(&cert.prefix_values[0])?;
    axiom.push(LetterId(1));

    let system = D0lSystem::new(alphabet, rules, axiom)?;
    Ok(report(system, core_levels.iter().map(lift).collect()))
}
