//! JSON documents written by `synth --format json` and `decide --json`.
//!
//! Words are arrays of letter names, so multi-character names such as
//! `b12` stay unambiguous. Integers are written as plain JSON numbers of any
//! size.

use d0l_synth::{Certificate, D0lError, D0lSystem, MembershipVerdict, Polynomial, SynthesisReport};
use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

mod big_ints {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let numbers = values
            .iter()
            .map(|v| v.to_string().parse::<serde_json::Number>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        numbers.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        numbers
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// A synthesized system together with the polynomial it grows like.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub polynomial: String,
    pub degree: usize,
    pub shift_k: u64,
    #[serde(with = "big_ints")]
    pub difference_values: Vec<BigInt>,
    pub alphabet: Vec<String>,
    pub axiom: Vec<String>,
    pub rules: IndexMap<String, Vec<String>>,
}

fn word_names(system: &D0lSystem, w: &d0l_synth::Word) -> Vec<String> {
    w.iter()
        .map(|l| system.letter_name(l).expect("word over the system's alphabet").to_owned())
        .collect()
}

impl SystemDocument {
    pub fn from_report(report: &SynthesisReport) -> Self {
        let s = &report.system;
        SystemDocument {
            polynomial: report.input.to_string(),
            degree: report.degree,
            shift_k: report.shift_k,
            difference_values: report.difference_values.clone(),
            alphabet: s.alphabet().to_vec(),
            axiom: word_names(s, s.axiom()),
            rules: s
                .alphabet()
                .iter()
                .zip(s.rules())
                .map(|(a, w)| (a.clone(), word_names(s, w)))
                .collect(),
        }
    }

    /// Rebuilds the system; the alphabet array fixes letter order.
    pub fn to_system(&self) -> Result<D0lSystem, D0lError> {
        let rules: Vec<(&str, Vec<&str>)> = self
            .rules
            .iter()
            .map(|(a, w)| (a.as_str(), w.iter().map(String::as_str).collect()))
            .collect();
        let alphabet: Vec<&str> = self.alphabet.iter().map(String::as_str).collect();
        let axiom: Vec<&str> = self.axiom.iter().map(String::as_str).collect();
        D0lSystem::from_names(&alphabet, &rules, &axiom)
    }

    pub fn polynomial(&self) -> Result<Polynomial, d0l_synth::ParseError> {
        d0l_synth::parse_polynomial(&self.polynomial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum VerdictDocument {
    Member {
        polynomial: String,
        shift_k: u64,
        #[serde(with = "big_ints")]
        difference_values_at_k: Vec<BigInt>,
        #[serde(with = "big_ints")]
        prefix_values: Vec<BigInt>,
    },
    NotMember {
        polynomial: String,
        witness_n: u64,
        reason: String,
    },
}

impl VerdictDocument {
    pub fn new(f: &Polynomial, verdict: &MembershipVerdict) -> Self {
        let polynomial = f.to_string();
        match verdict {
            MembershipVerdict::Member(Certificate { shift_k, difference_values_at_k, prefix_values }) => {
                VerdictDocument::Member {
                    polynomial,
                    shift_k: *shift_k,
                    difference_values_at_k: difference_values_at_k.clone(),
                    prefix_values: prefix_values.clone(),
                }
            }
            MembershipVerdict::NotMember { witness_n, reason } => VerdictDocument::NotMember {
                polynomial,
                witness_n: *witness_n,
                reason: reason.as_str().to_owned(),
            },
        }
    }
}
