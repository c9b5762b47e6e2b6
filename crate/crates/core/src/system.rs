//! D0L-systems: an alphabet, a morphism given letter by letter, and an axiom.
//!
//! Letters are dense indices into the alphabet; names are kept for display
//! and serialization. The growth `n ↦ |σⁿ(w)|` is computed either by
//! rewriting the word or by pushing the Parikh vector of the axiom through
//! the incidence matrix, which never materializes the word.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

/// Default bound on the length of materialized words.
pub const DEFAULT_EXPANSION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub usize);

impl LetterId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite sequence of letters; the empty word is ε.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<LetterId>) -> Self {
        Word(letters)
    }

    /// `letter` repeated `count` times.
    pub fn repeat(letter: LetterId, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = LetterId> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, letter: LetterId) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    /// Renames every letter through `map`.
    pub fn relabel(&self, map: impl Fn(LetterId) -> LetterId) -> Word {
        Word(self.0.iter().map(|&l| map(l)).collect())
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<I: IntoIterator<Item = LetterId>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum D0lError {
    #[error("letter name must not be empty")]
    EmptyLetterName,
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("alphabet has {letters} letters but {rules} rules were given")]
    RuleCountMismatch { letters: usize, rules: usize },
    #[error("no rule for letter `{0}`")]
    MissingRule(String),
    #[error("unknown letter {0}")]
    UnknownLetter(String),
    #[error("expansion at step {step} would reach {length} letters, above the cap of {cap}")]
    ExpansionTooLarge { step: u64, length: usize, cap: usize },
}

/// A deterministic context-free Lindenmayer system `(A, σ, w)`.
///
/// The alphabet order is the construction order and fixes letter ids,
/// incidence matrix rows and serialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D0lSystem {
    alphabet: Vec<String>,
    rules: Vec<Word>,
    axiom: Word,
}

impl D0lSystem {
    /// `rules[i]` is the image of letter `i`.
    pub fn new(alphabet: Vec<String>, rules: Vec<Word>, axiom: Word) -> Result<Self, D0lError> {
        let mut seen = HashSet::new();
        for name in &alphabet {
            if name.is_empty() {
                return Err(D0lError::EmptyLetterName);
            }
            if !seen.insert(name.as_str()) {
                return Err(D0lError::DuplicateLetter(name.clone()));
            }
        }
        if rules.len() != alphabet.len() {
            return Err(D0lError::RuleCountMismatch { letters: alphabet.len(), rules: rules.len() });
        }
        let size = alphabet.len();
        for w in rules.iter().chain(std::iter::once(&axiom)) {
            if let Some(bad) = w.iter().find(|l| l.0 >= size) {
                return Err(D0lError::UnknownLetter(format!("#{}", bad.0)));
            }
        }
        Ok(D0lSystem { alphabet, rules, axiom })
    }

    /// Builds a system from letter names: `rules` pairs each letter with its
    /// image, in any order, and must cover the alphabet exactly.
    pub fn from_names<S: AsRef<str>>(
        alphabet: &[S],
        rules: &[(S, Vec<S>)],
        axiom: &[S],
    ) -> Result<Self, D0lError> {
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.as_ref().to_owned()).collect();
        let lookup = |name: &str| {
            alphabet
                .iter()
                .position(|a| a == name)
                .map(LetterId)
                .ok_or_else(|| D0lError::UnknownLetter(format!("`{name}`")))
        };
        let word = |names: &[S]| names.iter().map(|n| lookup(n.as_ref())).collect::<Result<Word, _>>();

        let mut images: Vec<Option<Word>> = vec![None; alphabet.len()];
        for (lhs, rhs) in rules {
            let id = lookup(lhs.as_ref())?;
            images[id.0] = Some(word(rhs)?);
        }
        let rules = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| D0lError::MissingRule(alphabet[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let axiom = word(axiom)?;
        D0lSystem::new(alphabet, rules, axiom)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letter_name(&self, id: LetterId) -> Option<&str> {
        self.alphabet.get(id.0).map(String::as_str)
    }

    pub fn letter(&self, name: &str) -> Option<LetterId> {
        self.alphabet.iter().position(|a| a == name).map(LetterId)
    }

    /// Image of a single letter.
    pub fn rule(&self, id: LetterId) -> Option<&Word> {
        self.rules.get(id.0)
    }

    pub fn rules(&self) -> &[Word] {
        &self.rules
    }

    pub fn axiom(&self) -> &Word {
        &self.axiom
    }

    /// Same alphabet and morphism, different axiom.
    pub fn with_axiom(&self, axiom: Word) -> Result<Self, D0lError> {
        D0lSystem::new(self.alphabet.clone(), self.rules.clone(), axiom)
    }

    /// Same system with the image of one letter replaced.
    pub fn with_rule(&self, id: LetterId, image: Word) -> Result<Self, D0lError> {
        let mut rules = self.rules.clone();
        match rules.get_mut(id.0) {
            Some(slot) => *slot = image,
            None => return Err(D0lError::UnknownLetter(format!("#{}", id.0))),
        }
        D0lSystem::new(self.alphabet.clone(), rules, self.axiom.clone())
    }

    /// Space-separated letter names, or `ε` for the empty word.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_owned();
        }
        w.iter()
            .map(|l| self.letter_name(l).unwrap_or("?"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check_word(&self, w: &Word) -> Result<(), D0lError> {
        match w.iter().find(|l| l.0 >= self.alphabet.len()) {
            Some(bad) => Err(D0lError::UnknownLetter(format!("#{}", bad.0))),
            None => Ok(()),
        }
    }

    /// `σ(w)`: the concatenation of the images of `w`'s letters.
    pub fn apply_morphism(&self, w: &Word) -> Result<Word, D0lError> {
        self.check_word(w)?;
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &Word) -> Word {
        let len = w.iter().map(|l| self.rules[l.0].len()).sum();
        let mut out = Vec::with_capacity(len);
        for l in w.iter() {
            out.extend_from_slice(self.rules[l.0].letters());
        }
        Word(out)
    }

    /// Length of `σ(w)` without building it.
    fn image_length(&self, w: &Word) -> usize {
        w.iter().fold(0usize, |acc, l| acc.saturating_add(self.rules[l.0].len()))
    }

    /// `σⁿ(axiom)`, failing before any intermediate word grows past `cap`.
    pub fn expand(&self, n: u64, cap: usize) -> Result<Word, D0lError> {
        let mut iter = self.expansions(cap);
        let mut word = iter.next().expect("expansions always yields the axiom")?;
        for _ in 0..n {
            word = iter.next().expect("expansions is infinite")?;
        }
        Ok(word)
    }

    /// `σ⁰(axiom), σ¹(axiom), …` with the same cap discipline as
    /// [`D0lSystem::expand`]. After the first error the iterator keeps
    /// returning that error.
    pub fn expansions(&self, cap: usize) -> Expansions<'_> {
        Expansions { system: self, current: Some(self.axiom.clone()), failed: None, step: 0, cap }
    }

    /// `M[a][b]` = number of occurrences of `b` in `σ(a)`.
    pub fn incidence_matrix(&self) -> Vec<Vec<BigUint>> {
        let size = self.alphabet.len();
        self.rules
            .iter()
            .map(|image| {
                let mut row = vec![BigUint::zero(); size];
                for l in image.iter() {
                    row[l.0] += 1u32;
                }
                row
            })
            .collect()
    }

    /// Letter-occurrence counts of `w`, indexed by letter id.
    pub fn parikh_vector(&self, w: &Word) -> Result<Vec<BigUint>, D0lError> {
        self.check_word(w)?;
        let mut v = vec![BigUint::zero(); self.alphabet.len()];
        for l in w.iter() {
            v[l.0] += 1u32;
        }
        Ok(v)
    }

    /// `|σⁿ(axiom)|` as `‖π(axiom) Mⁿ‖₁`.
    pub fn growth_length(&self, n: u64) -> BigUint {
        let mut counts = ParikhIter::new(self);
        for _ in 0..n {
            counts.step();
        }
        counts.total()
    }

    /// Growth lengths for `n ∈ [0, n_max]`.
    pub fn growth_table(&self, n_max: u64) -> GrowthTable {
        let mut counts = ParikhIter::new(self);
        let mut lengths = Vec::with_capacity(n_max as usize + 1);
        lengths.push(counts.total());
        for _ in 0..n_max {
            counts.step();
            lengths.push(counts.total());
        }
        GrowthTable { lengths }
    }

    /// `(A, σ, σ(w))`, whose growth is this system's growth shifted by one.
    pub fn advance_axiom(&self) -> D0lSystem {
        D0lSystem {
            alphabet: self.alphabet.clone(),
            rules: self.rules.clone(),
            axiom: self.apply_unchecked(&self.axiom),
        }
    }
}

/// Parikh vector of the current iterate, advanced through sparse rows of the
/// incidence matrix.
struct ParikhIter {
    rows: Vec<Vec<(usize, BigUint)>>,
    counts: Vec<BigUint>,
}

impl ParikhIter {
    fn new(system: &D0lSystem) -> Self {
        let rows = system
            .incidence_matrix()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let counts = system
            .parikh_vector(&system.axiom)
            .expect("axiom validated at construction");
        ParikhIter { rows, counts }
    }

    fn step(&mut self) {
        let mut next = vec![BigUint::zero(); self.counts.len()];
        for (a, count) in self.counts.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for (b, m) in &self.rows[a] {
                next[*b] += count * m;
            }
        }
        self.counts = next;
    }

    fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

pub struct Expansions<'a> {
    system: &'a D0lSystem,
    current: Option<Word>,
    failed: Option<D0lError>,
    step: u64,
    cap: usize,
}

impl Iterator for Expansions<'_> {
    type Item = Result<Word, D0lError>;

    fn next(&mut self) -> Option<Self::Item> {
        if let Some(e) = &self.failed {
            return Some(Err(e.clone()));
        }
        let word = self.current.take()?;
        if word.len() > self.cap {
            let e = D0lError::ExpansionTooLarge { step: self.step, length: word.len(), cap: self.cap };
            self.failed = Some(e.clone());
            return Some(Err(e));
        }
        // look ahead so the next word is never built past the cap
        let length = self.system.image_length(&word);
        if length > self.cap {
            self.failed = Some(D0lError::ExpansionTooLarge { step: self.step + 1, length, cap: self.cap });
        } else {
            self.current = Some(self.system.apply_unchecked(&word));
        }
        self.step += 1;
        Some(Ok(word))
    }
}

/// Growth lengths at `n = 0, 1, …, n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTable {
    lengths: Vec<BigUint>,
}

impl GrowthTable {
    pub fn lengths(&self) -> &[BigUint] {
        &self.lengths
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, &BigUint)> + '_ {
        self.lengths.iter().enumerate().map(|(n, l)| (n as u64, l))
    }

    pub fn n_max(&self) -> u64 {
        self.lengths.len() as u64 - 1
    }
}

impl fmt::Display for D0lSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet.join(" "))?;
        writeln!(f, "axiom: {}", self.render(&self.axiom))?;
        for (name, image) in self.alphabet.iter().zip(&self.rules) {
            writeln!(f, "{name} -> {}", self.render(image))?;
        }
        Ok(())
    }
}
