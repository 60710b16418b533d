use std::fmt;

use crate::error::{Error, Result};
use crate::group::{HeckeParams, Letter, Parity, Word};

/// Exponents `(k_1, ..., k_n)`, `n >= 1`, each a normalized nonzero residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTuple(Vec<i32>);

impl ExponentTuple {
    pub fn new(exponents: Vec<i32>, params: &HeckeParams) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidTuple("tuple must be nonempty".into()));
        }
        if let Some(bad) = exponents.iter().find(|&&k| !params.in_alphabet(k)) {
            return Err(Error::InvalidTuple(format!(
                "exponent {bad} is not a normalized residue for {params}"
            )));
        }
        Ok(Self(exponents))
    }

    pub(crate) fn from_unchecked(exponents: Vec<i32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum 2(|k_i| + 1)`: the length of the symmetric word built from it.
    pub fn weight(&self) -> u32 {
        tuple_weight(&self.0)
    }

    /// `(-k_n, ..., -k_1)`, the other tuple producing the same symmetric class.
    pub fn negated_reversed(&self, params: &HeckeParams) -> Self {
        Self(self.0.iter().rev().map(|&k| params.negate(k)).collect())
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn tuple_weight(ks: &[i32]) -> u32 {
    ks.iter().map(|k| 2 * (k.unsigned_abs() + 1)).sum()
}

/// Where the single `g^r` pivot sits in the mixed normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `i g^r i g^k1 ... i g^kn i g^-kn ... i g^-k1`
    Left,
    /// `i g^k1 ... i g^kn i g^r i g^-kn ... i g^-k1`
    Right,
}

/// Which normal form to build.
#[derive(Clone, Copy, Debug)]
pub enum NormalFormSpec<'a> {
    Symmetric(&'a ExponentTuple),
    PReciprocal(&'a ExponentTuple),
    Mixed(&'a ExponentTuple, Side),
    /// `(i g^r)^k`, `k != 0`.
    Power(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub word: Word,
    /// Every syllable is `i g^r`, so the word is a power of `i g^r`.
    pub collapses_to_power: bool,
}

/// Builds the reciprocal normal-form word.
///
/// Forms other than `Symmetric` exist only for even `p`, where `g^r` is an
/// involution.
pub fn gen_normal_form(spec: NormalFormSpec<'_>, params: &HeckeParams) -> Result<NormalForm> {
    if let NormalFormSpec::Power(k) = spec {
        let t = params.tilde().ok_or(Error::ParityMismatch {
            what: "power normal form",
            expected: Parity::Even,
            p: params.p(),
        })?;
        if k == 0 {
            return Err(Error::InvalidTuple("power must be nonzero".into()));
        }
        let pair = if k > 0 {
            [Letter::Iota, Letter::Gamma(t)]
        } else {
            [Letter::Gamma(t), Letter::Iota]
        };
        let letters = (0..k.unsigned_abs()).flat_map(|_| pair).collect();
        return Ok(NormalForm {
            word: Word::from_reduced_unchecked(letters),
            collapses_to_power: true,
        });
    }
    if let Some(tuple) = spec_tuple(&spec) {
        for &k in tuple.exponents() {
            if !params.in_alphabet(k) {
                return Err(Error::InvalidTuple(format!("exponent {k} outside alphabet")));
            }
        }
    }
    let syllables = normal_form_syllables(&spec, params)?;
    let collapses_to_power = params
        .tilde()
        .is_some_and(|t| syllables.iter().all(|&k| k == t));
    Ok(NormalForm {
        word: Word::from_reduced_unchecked(
            syllables
                .iter()
                .flat_map(|&k| [Letter::Iota, Letter::Gamma(k)])
                .collect(),
        ),
        collapses_to_power,
    })
}

fn spec_tuple<'a>(spec: &NormalFormSpec<'a>) -> Option<&'a ExponentTuple> {
    match *spec {
        NormalFormSpec::Symmetric(t) | NormalFormSpec::PReciprocal(t) | NormalFormSpec::Mixed(t, _) => {
            Some(t)
        }
        NormalFormSpec::Power(_) => None,
    }
}

/// Syllable exponents of the ι-led normal form (`k > 0` for powers).
pub(crate) fn normal_form_syllables(
    spec: &NormalFormSpec<'_>,
    params: &HeckeParams,
) -> Result<Vec<i32>> {
    let needs_even = |what| {
        params.tilde().ok_or(Error::ParityMismatch {
            what,
            expected: Parity::Even,
            p: params.p(),
        })
    };
    let mirror = |ks: &[i32]| ks.iter().rev().map(|&k| params.negate(k)).collect::<Vec<_>>();
    Ok(match *spec {
        NormalFormSpec::Symmetric(t) => {
            let ks = t.exponents();
            let mut out = ks.to_vec();
            out.extend(mirror(ks));
            out
        }
        NormalFormSpec::PReciprocal(t) => {
            let tilde = needs_even("p-reciprocal normal form")?;
            let ks = t.exponents();
            let mut out = vec![tilde];
            out.extend_from_slice(ks);
            out.push(tilde);
            out.extend(mirror(ks));
            out
        }
        NormalFormSpec::Mixed(t, side) => {
            let tilde = needs_even("mixed normal form")?;
            let ks = t.exponents();
            let mut out = Vec::with_capacity(2 * ks.len() + 1);
            if side == Side::Left {
                out.push(tilde);
            }
            out.extend_from_slice(ks);
            if side == Side::Right {
                out.push(tilde);
            }
            out.extend(mirror(ks));
            out
        }
        NormalFormSpec::Power(k) => {
            let tilde = needs_even("power normal form")?;
            vec![tilde; k.unsigned_abs() as usize]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_reciprocal;

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    fn tuple(ks: &[i32], params: &HeckeParams) -> ExponentTuple {
        ExponentTuple::new(ks.to_vec(), params).unwrap()
    }

    #[test]
    fn symmetric_example() {
        let p5 = p(5);
        let t = tuple(&[2, -1], &p5);
        let nf = gen_normal_form(NormalFormSpec::Symmetric(&t), &p5).unwrap();
        assert_eq!(nf.word.to_string(), "i g^2 i g^-1 i g^1 i g^-2");
        assert_eq!(nf.word.word_length(), 10);
        assert!(!nf.collapses_to_power);
    }

    #[test]
    fn p_reciprocal_example() {
        let p4 = p(4);
        let t = tuple(&[1], &p4);
        let nf = gen_normal_form(NormalFormSpec::PReciprocal(&t), &p4).unwrap();
        assert_eq!(nf.word.to_string(), "i g^2 i g^1 i g^2 i g^-1");
        assert_eq!(nf.word.word_length(), 10);
    }

    #[test]
    fn power_example() {
        let p4 = p(4);
        let nf = gen_normal_form(NormalFormSpec::Power(2), &p4).unwrap();
        assert_eq!(nf.word.to_string(), "i g^2 i g^2");
        assert_eq!(nf.word.word_length(), 6);
        let neg = gen_normal_form(NormalFormSpec::Power(-2), &p4).unwrap();
        assert_eq!(neg.word.to_string(), "g^2 i g^2 i");
        assert!(gen_normal_form(NormalFormSpec::Power(0), &p4).is_err());
    }

    #[test]
    fn mixed_sides() {
        let p6 = p(6);
        let t = tuple(&[1, -2], &p6);
        let left = gen_normal_form(NormalFormSpec::Mixed(&t, Side::Left), &p6).unwrap();
        let right = gen_normal_form(NormalFormSpec::Mixed(&t, Side::Right), &p6).unwrap();
        assert_eq!(left.word.to_string(), "i g^3 i g^1 i g^-2 i g^2 i g^-1");
        assert_eq!(right.word.to_string(), "i g^1 i g^-2 i g^3 i g^2 i g^-1");
        // sum 2(|k|+1) + (r+1)
        assert_eq!(left.word.word_length(), 10 + 4);
        assert_eq!(right.word.word_length(), 10 + 4);
    }

    #[test]
    fn parity_mismatch_for_odd_p() {
        let p5 = p(5);
        let t = tuple(&[1], &p5);
        for spec in [
            NormalFormSpec::PReciprocal(&t),
            NormalFormSpec::Mixed(&t, Side::Left),
            NormalFormSpec::Power(2),
        ] {
            assert!(matches!(
                gen_normal_form(spec, &p5),
                Err(Error::ParityMismatch { .. })
            ));
        }
    }

    #[test]
    fn symmetric_tilde_collapses() {
        let p4 = p(4);
        let t = tuple(&[2], &p4);
        let nf = gen_normal_form(NormalFormSpec::Symmetric(&t), &p4).unwrap();
        assert!(nf.collapses_to_power);
        assert_eq!(nf.word.to_string(), "i g^2 i g^2");
    }

    #[test]
    fn tuple_validation() {
        let p4 = p(4);
        assert!(ExponentTuple::new(vec![], &p4).is_err());
        assert!(ExponentTuple::new(vec![-2], &p4).is_err());
        assert!(ExponentTuple::new(vec![3], &p4).is_err());
        assert_eq!(tuple(&[1, 2], &p4).weight(), 4 + 6);
        assert_eq!(tuple(&[1, 2], &p4).negated_reversed(&p4), tuple(&[2, -1], &p4));
    }

    #[test]
    fn generated_words_are_reciprocal() {
        for n in 3..9 {
            let params = p(n);
            let alphabet = params.alphabet();
            for &a in &alphabet {
                for &b in &alphabet {
                    let t = tuple(&[a, b], &params);
                    let mut specs = vec![NormalFormSpec::Symmetric(&t)];
                    if params.is_even() {
                        specs.push(NormalFormSpec::PReciprocal(&t));
                        specs.push(NormalFormSpec::Mixed(&t, Side::Left));
                        specs.push(NormalFormSpec::Mixed(&t, Side::Right));
                    }
                    for spec in specs {
                        let nf = gen_normal_form(spec, &params).unwrap();
                        assert!(nf.word.is_reduced(&params));
                        assert!(is_reciprocal(&nf.word, &params).unwrap(), "{spec:?}");
                    }
                }
            }
        }
    }
}
