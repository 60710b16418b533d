use std::cmp::Ordering;

use super::HeckeParams;

/// A generator letter: the involution `i` or a normalized nonzero power `g^k`.
///
/// Letters are totally ordered with `i` first and powers ordered by `|k|`,
/// positive before negative. Class keys are minimal rotations in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Iota,
    Gamma(i32),
}

impl Letter {
    pub fn is_iota(&self) -> bool {
        matches!(self, Letter::Iota)
    }

    pub fn exponent(&self) -> Option<i32> {
        match *self {
            Letter::Iota => None,
            Letter::Gamma(k) => Some(k),
        }
    }

    /// Contribution to word length.
    pub fn weight(&self) -> u32 {
        match *self {
            Letter::Iota => 1,
            Letter::Gamma(k) => k.unsigned_abs(),
        }
    }

    fn rank(&self) -> (u32, bool) {
        match *self {
            Letter::Iota => (0, false),
            Letter::Gamma(k) => (k.unsigned_abs(), k < 0),
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A reduced word in `Z_2 * Z_p`: letters alternate between `i` and powers
/// of `g`. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn iota() -> Self {
        Self {
            letters: vec![Letter::Iota],
        }
    }

    pub fn gamma(k: i64, params: &HeckeParams) -> Self {
        Self {
            letters: params
                .normalize_exponent(k)
                .map(Letter::Gamma)
                .into_iter()
                .collect(),
        }
    }

    /// Reduces an arbitrary letter sequence. Exponents need not be
    /// normalized; powers that vanish modulo `p` are dropped.
    pub fn from_letters<I>(letters: I, params: &HeckeParams) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut stack = Vec::new();
        for l in letters {
            push_reduced(&mut stack, l, params);
        }
        Self { letters: stack }
    }

    /// Builds `i g^c0 i g^c1 ...` from syllable exponents, reducing as needed.
    pub fn from_syllables(exponents: &[i32], params: &HeckeParams) -> Self {
        Self::from_letters(
            exponents
                .iter()
                .flat_map(|&k| [Letter::Iota, Letter::Gamma(k)]),
            params,
        )
    }

    /// Wraps letters that are already known to be reduced and normalized.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters (syllable count times two for alternating words).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Count of `i` letters plus the sum of `|k|` over powers of `g`.
    pub fn word_length(&self) -> u32 {
        self.letters.iter().map(Letter::weight).sum()
    }

    pub fn multiply(&self, other: &Word, params: &HeckeParams) -> Word {
        let mut stack = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut stack, l, params);
        }
        Word { letters: stack }
    }

    pub fn inverse(&self, params: &HeckeParams) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| match *l {
                    Letter::Iota => Letter::Iota,
                    Letter::Gamma(k) => Letter::Gamma(params.negate(k)),
                })
                .collect(),
        }
    }

    /// `self` conjugated by `u`, i.e. `u self u^-1`.
    pub fn conjugate_by(&self, u: &Word, params: &HeckeParams) -> Word {
        u.multiply(self, params).multiply(&u.inverse(params), params)
    }

    pub fn pow(&self, k: u32, params: &HeckeParams) -> Word {
        (0..k).fold(Word::identity(), |acc, _| acc.multiply(self, params))
    }

    /// True when no two adjacent letters share a kind and every exponent is
    /// a normalized nonzero residue.
    pub fn is_reduced(&self, params: &HeckeParams) -> bool {
        self.letters.iter().all(|l| match *l {
            Letter::Iota => true,
            Letter::Gamma(k) => params.in_alphabet(k),
        }) && self
            .letters
            .windows(2)
            .all(|w| w[0].is_iota() != w[1].is_iota())
    }
}

fn push_reduced(stack: &mut Vec<Letter>, letter: Letter, params: &HeckeParams) {
    match (stack.last().copied(), letter) {
        (Some(Letter::Iota), Letter::Iota) => {
            stack.pop();
        }
        (Some(Letter::Gamma(a)), Letter::Gamma(b)) => {
            stack.pop();
            if let Some(c) = params.normalize_exponent(a as i64 + b as i64) {
                stack.push(Letter::Gamma(c));
            }
        }
        (_, Letter::Gamma(b)) => {
            if let Some(c) = params.normalize_exponent(b as i64) {
                stack.push(Letter::Gamma(c));
            }
        }
        (_, Letter::Iota) => stack.push(Letter::Iota),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    fn w(s: &str, params: &HeckeParams) -> Word {
        parse_word(s, params).unwrap()
    }

    #[test]
    fn letter_order() {
        let mut v = vec![
            Letter::Gamma(-2),
            Letter::Gamma(2),
            Letter::Gamma(-1),
            Letter::Iota,
            Letter::Gamma(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Letter::Iota,
                Letter::Gamma(1),
                Letter::Gamma(-1),
                Letter::Gamma(2),
                Letter::Gamma(-2)
            ]
        );
    }

    #[test]
    fn multiply_examples() {
        let p5 = p(5);
        assert!(w("g^2", &p5).multiply(&w("g^3", &p5), &p5).is_identity());
        for n in 3..8 {
            let q = p(n);
            assert!(Word::iota().multiply(&Word::iota(), &q).is_identity());
        }
        let prod = w("i g^2 i", &p5).multiply(&w("i g^1", &p5), &p5);
        assert_eq!(prod, w("i g^-2", &p5));
        assert_eq!(
            prod.letters(),
            &[Letter::Iota, Letter::Gamma(-2)]
        );
    }

    #[test]
    fn cascading_cancellation() {
        let p3 = p(3);
        let a = w("i g^1 i", &p3);
        let b = w("i g^-1 i", &p3);
        assert!(a.multiply(&b, &p3).is_identity());
    }

    #[test]
    fn inverse_examples() {
        let p3 = p(3);
        assert_eq!(
            w("i g^1 i g^-1", &p3).inverse(&p3),
            w("g^1 i g^-1 i", &p3)
        );
        assert_eq!(Word::iota().inverse(&p3), Word::iota());
        let p4 = p(4);
        assert_eq!(w("g^2", &p4).inverse(&p4), w("g^2", &p4));
    }

    #[test]
    fn word_length_examples() {
        let p5 = p(5);
        assert_eq!(w("i g^2 i g^-1", &p5).word_length(), 5);
        assert_eq!(Word::iota().word_length(), 1);
        let p3 = p(3);
        assert_eq!(w("i g^1 i g^1 i g^-1 i g^-1", &p3).word_length(), 8);
        assert_eq!(Word::identity().word_length(), 0);
    }

    #[test]
    fn from_letters_normalizes() {
        let p3 = p(3);
        let word = Word::from_letters([Letter::Gamma(1), Letter::Gamma(1)], &p3);
        assert_eq!(word.letters(), &[Letter::Gamma(-1)]);
        let word = Word::from_letters([Letter::Gamma(3), Letter::Iota], &p3);
        assert_eq!(word, Word::iota());
    }

    #[test]
    fn pow_and_conjugate() {
        let p3 = p(3);
        let x = w("i g^1", &p3);
        assert_eq!(x.pow(3, &p3).len(), 6);
        let u = w("g^1", &p3);
        let c = x.conjugate_by(&u, &p3);
        assert_eq!(c, w("g^1 i g^1 g^-1", &p3));
    }
}
