//! Polynomial growth functions of D0L-systems.
//!
//! This crate decides whether a rational polynomial `F` takes a positive
//! integer value at every natural number and, when it does, builds a
//! D0L-system `(A, σ, w)` with `|σⁿ(w)| = F(n)` for every `n`.
//!
//! The pieces, bottom-up:
//!
//! * [`polynomial`]: exact rational polynomials, the forward difference
//!   operator and integer-valuedness.
//! * [`membership`]: the decision procedure for positive integer-valued
//!   polynomials, with certificates and counterexamples.
//! * [`system`]: D0L-systems, morphism iteration and growth lengths through
//!   Parikh vectors.
//! * [`synth`]: the construction itself (nested integration gadgets plus a
//!   delay chain for shifted polynomials).
//! * [`verify`]: independent checks of synthesized systems.
//! * [`parse`]: a small expression language for writing polynomials.
//!
//! All arithmetic is exact. There is no floating point anywhere.

pub mod membership;
pub mod parse;
pub mod polynomial;
pub mod sample;
pub mod synth;
pub mod system;
pub mod verify;

pub use membership::{decide_membership, Certificate, MembershipError, MembershipVerdict, Reason};
pub use parse::{parse_polynomial, ParseError, ParseErrorKind};
pub use polynomial::{Integer, Polynomial, Rational};
pub use synth::{SynthesisError, SynthesisReport};
pub use system::{D0lError, D0lSystem, GrowthTable, LetterId, Word};
pub use verify::{Method, Verdict, VerificationOutcome};
