use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{HeckeParams, Parity};

/// Which tuple family a count or estimate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Setting {
    /// Symmetric tuples for odd `p`: exponents in `{±1, ..., ±r}`, weight `2(|k|+1)`.
    Thm1,
    /// Symmetric tuples for even `p`: `r` taken once, weight `2(|k|+1)`.
    Thm2,
    /// Exponent sums with `-r < k <= r`, weight `|k|`.
    Lemma42,
    /// Exponent sums with `0 < |k| <= r`, weight `|k|`.
    Lemma43,
}

impl Setting {
    pub const ALL: [Setting; 4] = [
        Setting::Thm1,
        Setting::Thm2,
        Setting::Lemma42,
        Setting::Lemma43,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Setting::Thm1 => "thm1",
            Setting::Thm2 => "thm2",
            Setting::Lemma42 => "lemma42",
            Setting::Lemma43 => "lemma43",
        }
    }

    /// Syllable-weight settings (as opposed to bare exponent sums).
    pub fn uses_syllable_weights(&self) -> bool {
        matches!(self, Setting::Thm1 | Setting::Thm2)
    }

    /// Whether `r` appears once rather than as `±r`.
    pub fn single_top(&self) -> bool {
        matches!(self, Setting::Thm2 | Setting::Lemma42)
    }

    pub(crate) fn check_parity(&self, params: &HeckeParams) -> Result<()> {
        let expected = match self {
            Setting::Thm1 => Parity::Odd,
            Setting::Thm2 => Parity::Even,
            _ => return Ok(()),
        };
        if params.parity() == expected {
            Ok(())
        } else {
            Err(Error::ParityMismatch {
                what: self.as_str(),
                expected,
                p: params.p(),
            })
        }
    }

    /// The setting whose symmetric tuples count the reciprocal classes of `p`.
    pub fn symmetric_for(params: &HeckeParams) -> Setting {
        if params.is_even() {
            Setting::Thm2
        } else {
            Setting::Thm1
        }
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Setting {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Setting::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown setting `{s}`"))
    }
}

/// `(weight, multiplicity)` pairs with strictly increasing weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightAlphabet {
    entries: Vec<(u32, u32)>,
}

impl WeightAlphabet {
    pub fn new(entries: Vec<(u32, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("weight alphabet is empty".into()));
        }
        if entries.iter().any(|&(w, m)| w == 0 || m == 0) {
            return Err(Error::InvalidTuple(
                "weights and multiplicities must be positive".into(),
            ));
        }
        if entries.windows(2).any(|e| e[0].0 >= e[1].0) {
            return Err(Error::InvalidTuple(
                "weights must be strictly increasing".into(),
            ));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn min_weight(&self) -> u32 {
        self.entries[0].0
    }

    /// Number of letters.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    /// Letter weights with repetition, for brute-force checks.
    pub fn letters(&self) -> Vec<u32> {
        self.entries
            .iter()
            .flat_map(|&(w, m)| std::iter::repeat_n(w, m as usize))
            .collect()
    }
}

impl fmt::Display for WeightAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({w}, {m})")?;
        }
        f.write_str("}")
    }
}

/// Weight alphabet of a setting. The syllable settings check the parity of
/// `p`; the exponent-sum settings only use `r`.
pub fn syllable_alphabet(params: &HeckeParams, setting: Setting) -> Result<WeightAlphabet> {
    setting.check_parity(params)?;
    let r = params.r();
    let weight = |j: u32| if setting.uses_syllable_weights() { 2 * (j + 1) } else { j };
    let top = if setting.single_top() { 1 } else { 2 };
    let entries = (1..=r)
        .map(|j| (weight(j), if j == r { top } else { 2 }))
        .collect();
    WeightAlphabet::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    #[test]
    fn alphabet_examples() {
        assert_eq!(
            syllable_alphabet(&p(3), Setting::Thm1).unwrap().entries(),
            &[(4, 2)]
        );
        assert_eq!(
            syllable_alphabet(&p(4), Setting::Thm2).unwrap().entries(),
            &[(4, 2), (6, 1)]
        );
        assert_eq!(
            syllable_alphabet(&p(4), Setting::Lemma42).unwrap().entries(),
            &[(1, 2), (2, 1)]
        );
        assert_eq!(
            syllable_alphabet(&p(5), Setting::Lemma43).unwrap().entries(),
            &[(1, 2), (2, 2)]
        );
    }

    #[test]
    fn alphabet_parity() {
        assert!(matches!(
            syllable_alphabet(&p(4), Setting::Thm1),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(matches!(
            syllable_alphabet(&p(5), Setting::Thm2),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(syllable_alphabet(&p(5), Setting::Lemma42).is_ok());
    }

    #[test]
    fn alphabet_matches_exponents() {
        for q in 3..=12 {
            let params = p(q);
            let setting = Setting::symmetric_for(&params);
            let a = syllable_alphabet(&params, setting).unwrap();
            let mut from_exponents: Vec<u32> = params
                .alphabet()
                .iter()
                .map(|k| 2 * (k.unsigned_abs() + 1))
                .collect();
            from_exponents.sort();
            assert_eq!(a.letters(), from_exponents);
        }
    }

    #[test]
    fn alphabet_validation() {
        assert!(WeightAlphabet::new(vec![]).is_err());
        assert!(WeightAlphabet::new(vec![(2, 1), (2, 1)]).is_err());
        assert!(WeightAlphabet::new(vec![(0, 1)]).is_err());
        assert!(WeightAlphabet::new(vec![(1, 0)]).is_err());
    }

    #[test]
    fn setting_names() {
        for s in Setting::ALL {
            assert_eq!(s.as_str().parse::<Setting>().unwrap(), s);
        }
    }
}
