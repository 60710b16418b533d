use std::collections::VecDeque;
use std::fmt;

use super::{HeckeParams, Letter, Word};
use crate::error::{Error, Result};

/// A cyclically reduced word, read cyclically.
///
/// Words of two or more letters alternate `i` / `g^k` around the whole cycle,
/// so they have an even letter count; these are the hyperbolic-shape words.
/// Zero- and one-letter words are the torsion cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    /// Validates that `letters` are reduced and cyclically reduced.
    pub fn new(letters: Vec<Letter>, params: &HeckeParams) -> Result<Self> {
        let word = Word::from_reduced_unchecked(letters);
        if !word.is_reduced(params) {
            return Err(Error::InvalidTuple(format!("`{word}` is not reduced")));
        }
        let letters = word.into_letters();
        if letters.len() >= 2 && letters[0].is_iota() == letters[letters.len() - 1].is_iota() {
            return Err(Error::InvalidTuple(
                "first and last letters cancel cyclically".into(),
            ));
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_unchecked(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// The hyperbolic cyclic word `i g^c0 i g^c1 ...`. Exponents must already
    /// be normalized and nonzero.
    pub fn from_syllables(exponents: &[i32]) -> Self {
        Self {
            letters: exponents
                .iter()
                .flat_map(|&k| [Letter::Iota, Letter::Gamma(k)])
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.letters.len() >= 2
    }

    pub fn word_length(&self) -> u32 {
        self.letters.iter().map(Letter::weight).sum()
    }

    pub fn to_word(&self) -> Word {
        Word::from_reduced_unchecked(self.letters.clone())
    }

    /// Cyclic word of the inverse element.
    pub fn inverse(&self, params: &HeckeParams) -> CyclicWord {
        CyclicWord {
            letters: self.to_word().inverse(params).into_letters(),
        }
    }

    pub fn rotated(&self, by: usize) -> CyclicWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let n = letters.len();
            letters.rotate_left(by % n);
        }
        CyclicWord { letters }
    }

    /// Syllable exponents of the rotation that starts at the first `i`.
    ///
    /// Empty for torsion words.
    pub fn syllables(&self) -> Vec<i32> {
        if !self.is_hyperbolic() {
            return Vec::new();
        }
        let start = usize::from(!self.letters[0].is_iota());
        (0..self.letters.len() / 2)
            .map(|s| {
                self.letters[(start + 2 * s + 1) % self.letters.len()]
                    .exponent()
                    .expect("alternating word")
            })
            .collect()
    }

    /// Lexicographically least rotation in the letter order.
    pub fn canonical_form(&self) -> ClassKey {
        let k = least_rotation(&self.letters);
        ClassKey(self.rotated(k))
    }

    /// Smallest cyclic period: `self = root^k` as cyclic sequences.
    pub fn primitive_root(&self) -> Result<(CyclicWord, u32)> {
        if !self.is_hyperbolic() {
            return Err(Error::TorsionInput);
        }
        let d = cyclic_period(&self.letters);
        Ok((
            CyclicWord {
                letters: self.letters[..d].to_vec(),
            },
            (self.letters.len() / d) as u32,
        ))
    }
}

/// Canonical rotation of a cyclic word: equal keys mean conjugate elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey(CyclicWord);

impl ClassKey {
    pub fn cyclic_word(&self) -> &CyclicWord {
        &self.0
    }

    pub fn into_cyclic_word(self) -> CyclicWord {
        self.0
    }

    pub fn word_length(&self) -> u32 {
        self.0.word_length()
    }

    /// Syllable exponents of the canonical rotation (which starts with `i`
    /// for hyperbolic classes).
    pub fn syllables(&self) -> Vec<i32> {
        self.0.syllables()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.0.is_hyperbolic()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_letters(f, &self.letters)
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Splits `w = u c u^-1` with `c` cyclically reduced.
///
/// Returns the core `c` and the conjugator `u`.
pub fn cyclic_reduce(w: &Word, params: &HeckeParams) -> Result<(CyclicWord, Word)> {
    if w.is_identity() {
        return Err(Error::IdentityInput);
    }
    let mut core: VecDeque<Letter> = w.letters().iter().copied().collect();
    let mut conjugator = Vec::new();
    while core.len() >= 2 {
        match (core[0], core[core.len() - 1]) {
            (Letter::Iota, Letter::Iota) => {
                core.pop_front();
                core.pop_back();
                conjugator.push(Letter::Iota);
            }
            (Letter::Gamma(a), Letter::Gamma(b)) => {
                // g^a m g^b = g^a (m g^(a+b)) g^-a
                core.pop_front();
                core.pop_back();
                conjugator.push(Letter::Gamma(a));
                if let Some(c) = params.normalize_exponent(a as i64 + b as i64) {
                    core.push_back(Letter::Gamma(c));
                }
            }
            _ => break,
        }
    }
    Ok((
        CyclicWord::from_unchecked(core.into_iter().collect()),
        Word::from_letters(conjugator, params),
    ))
}

/// Booth's least-rotation algorithm; returns the starting index of the
/// lexicographically least rotation (the first one when there are ties).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        // here i == -1 or the characters agree
        if sj != at((k as isize + i + 1) as usize) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Smallest `d` dividing `s.len()` with `s` invariant under rotation by `d`.
pub(crate) fn cyclic_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // prefix function
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let d = n - pi[n - 1];
    if n.is_multiple_of(d) {
        d
    } else {
        n
    }
}
