//! Checking a system's growth against a polynomial, and the two growth
//! computations against each other.
//!
//! Scans run in increasing `n` and stop at the first mismatch.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::polynomial::{Polynomial, Rational};
use crate::system::{D0lError, D0lSystem, DEFAULT_EXPANSION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Rewrite the axiom and measure the words.
    Expand,
    /// Parikh vector times incidence matrix.
    Matrix,
    /// Both of the above, which must also agree with each other.
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Expand => "expand",
            Method::Matrix => "matrix",
            Method::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Least failing `n`. `expected` is `F(n)` for growth checks and the
    /// matrix length for cross checks.
    Fail { n: u64, expected: Rational, actual: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub n_max: u64,
    pub method: Method,
    pub result: Verdict,
    /// Points not compared because expansion hit the cap (cross checks only).
    pub skipped: Vec<u64>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.result == Verdict::Pass
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            Verdict::Pass => write!(f, "PASS: n in [0, {}] ({})", self.n_max, self.method)?,
            Verdict::Fail { n, expected, actual } => write!(
                f,
                "FAIL at n = {n}: expected {expected}, actual {actual} ({})",
                self.method
            )?,
        }
        if !self.skipped.is_empty() {
            write!(f, "; skipped {} point(s) above the expansion cap", self.skipped.len())?;
        }
        Ok(())
    }
}

fn outcome(n_max: u64, method: Method, result: Verdict) -> VerificationOutcome {
    VerificationOutcome { n_max, method, result, skipped: Vec::new() }
}

fn matches(expected: &Rational, actual: &BigUint) -> bool {
    *expected == Rational::from_integer(BigInt::from(actual.clone()))
}

/// Whether `|σⁿ(axiom)| = F(n)` for every `n ∈ [0, n_max]`, using the
/// default expansion cap.
pub fn verify_growth(
    system: &D0lSystem,
    f: &Polynomial,
    n_max: u64,
    method: Method,
) -> Result<VerificationOutcome, D0lError> {
    verify_growth_with_cap(system, f, n_max, method, DEFAULT_EXPANSION_CAP)
}

/// Expansion methods propagate [`D0lError::ExpansionTooLarge`] when a word
/// passes `cap`; points before that have already been compared.
pub fn verify_growth_with_cap(
    system: &D0lSystem,
    f: &Polynomial,
    n_max: u64,
    method: Method,
    cap: usize,
) -> Result<VerificationOutcome, D0lError> {
    let matrix = match method {
        Method::Expand => None,
        Method::Matrix | Method::Both => Some(system.growth_table(n_max)),
    };
    let mut words = match method {
        Method::Matrix => None,
        Method::Expand | Method::Both => Some(system.expansions(cap)),
    };

    for n in 0..=n_max {
        let expected = f.evaluate(&BigInt::from(n));
        if let Some(table) = &matrix {
            let actual = &table.lengths()[n as usize];
            if !matches(&expected, actual) {
                return Ok(outcome(n_max, method, Verdict::Fail { n, expected, actual: actual.clone() }));
            }
        }
        if let Some(words) = words.as_mut() {
            let word = words.next().expect("expansions is infinite")?;
            let actual = BigUint::from(word.len());
            if !matches(&expected, &actual) {
                return Ok(outcome(n_max, method, Verdict::Fail { n, expected, actual }));
            }
        }
    }
    Ok(outcome(n_max, method, Verdict::Pass))
}

/// Whether expansion lengths equal matrix lengths on `[0, n_max]`, with the
/// default expansion cap.
pub fn cross_check(system: &D0lSystem, n_max: u64) -> VerificationOutcome {
    cross_check_with_cap(system, n_max, DEFAULT_EXPANSION_CAP)
}

/// Points whose words would pass `cap` are skipped and listed in the
/// outcome; once the cap is hit every later point is skipped too.
pub fn cross_check_with_cap(system: &D0lSystem, n_max: u64, cap: usize) -> VerificationOutcome {
    let table = system.growth_table(n_max);
    let mut words = system.expansions(cap);
    let mut skipped = Vec::new();
    for (n, matrix_len) in table.entries() {
        match words.next().expect("expansions is infinite") {
            Ok(word) => {
                let actual = BigUint::from(word.len());
                if actual != *matrix_len {
                    let expected = Rational::from_integer(BigInt::from(matrix_len.clone()));
                    return VerificationOutcome {
                        n_max,
                        method: Method::Both,
                        result: Verdict::Fail { n, expected, actual },
                        skipped,
                    };
                }
            }
            Err(_) => skipped.push(n),
        }
    }
    VerificationOutcome { n_max, method: Method::Both, result: Verdict::Pass, skipped }
}
