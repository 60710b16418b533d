//! Exhaustive search used to validate the normal-form enumeration.
//!
//! It walks every alternating cyclic word `i g^c0 i g^c1 ...` of bounded
//! length, picks class representatives by brute-force minimum rotation and
//! tests reciprocity by scanning rotations of the inverse. Nothing here
//! relies on the normal forms.

use std::collections::BTreeSet;

use super::enumerate::{records_from_keys, ReciprocalClassRecord};
use crate::error::Result;
use crate::group::{ClassKey, CyclicWord, HeckeParams, Letter};

/// All reciprocal hyperbolic classes of word length at most `x`.
pub fn oracle_enumerate_reciprocal(
    params: &HeckeParams,
    x: u32,
) -> Result<Vec<ReciprocalClassRecord>> {
    let alphabet = params.alphabet();
    let mut keys = BTreeSet::new();
    let mut syllables = Vec::new();
    walk(params, &alphabet, x, 0, &mut syllables, &mut keys);
    records_from_keys(keys, params)
}

fn walk(
    params: &HeckeParams,
    alphabet: &[i32],
    x: u32,
    used: u32,
    syllables: &mut Vec<i32>,
    keys: &mut BTreeSet<ClassKey>,
) {
    if !syllables.is_empty() {
        consider(params, syllables, keys);
    }
    for &k in alphabet {
        let w = used + 1 + k.unsigned_abs();
        if w <= x {
            syllables.push(k);
            walk(params, alphabet, x, w, syllables, keys);
            syllables.pop();
        }
    }
}

fn letters_of(syllables: &[i32]) -> Vec<Letter> {
    syllables
        .iter()
        .flat_map(|&k| [Letter::Iota, Letter::Gamma(k)])
        .collect()
}

fn rotations(letters: &[Letter]) -> impl Iterator<Item = Vec<Letter>> + '_ {
    (0..letters.len()).map(move |s| {
        let mut v = letters.to_vec();
        v.rotate_left(s);
        v
    })
}

fn consider(params: &HeckeParams, syllables: &[i32], keys: &mut BTreeSet<ClassKey>) {
    let letters = letters_of(syllables);
    let least = rotations(&letters).min().expect("nonempty");
    // The least rotation starts with `i`; only keep it once.
    if least != letters {
        return;
    }
    let inverse: Vec<Letter> = letters
        .iter()
        .rev()
        .map(|l| match *l {
            Letter::Iota => Letter::Iota,
            Letter::Gamma(k) => Letter::Gamma(params.negate(k)),
        })
        .collect();
    if rotations(&inverse).any(|r| r == letters) {
        keys.insert(CyclicWord::from_syllables(syllables).canonical_form());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recip::enumerate_reciprocal_classes;

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_enumerate_reciprocal(&p(3), 8).unwrap().len(), 3);
        assert!(oracle_enumerate_reciprocal(&p(3), 3).unwrap().is_empty());
        let p4 = p(4);
        let recs = oracle_enumerate_reciprocal(&p4, 8).unwrap();
        assert!(recs.iter().any(|r| r.key.to_string() == "i g^2 i g^2"));
    }

    #[test]
    fn oracle_matches_enumeration() {
        for q in 3..=7 {
            let params = p(q);
            for x in 0..=12 {
                let a = enumerate_reciprocal_classes(&params, x).unwrap();
                let b = oracle_enumerate_reciprocal(&params, x).unwrap();
                assert_eq!(a, b, "p={q} x={x}");
            }
        }
    }
}
