//! Matching reciprocal classes against the normal-form shapes.
//!
//! A hyperbolic class is a cyclic sequence of syllable exponents
//! `c_0 ... c_{m-1}` (each syllable is `i g^c`). It is reciprocal exactly
//! when some reflection `c_j -> -c_{s-j}` preserves the cycle. The shapes
//! below test one rotation at a time.

use std::fmt;
use std::str::FromStr;

use super::ExponentTuple;
use crate::error::{Error, Result};
use crate::group::{is_reciprocal, ClassKey, HeckeParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReciprocalType {
    /// Reversed only by conjugates of `i`.
    Symmetric,
    /// Reversed only by conjugates of `g^r`.
    PReciprocal,
    /// Reversed by both kinds, not a power of `i g^r`.
    MixedNoPower,
    /// A power of `i g^r`.
    PowerOfIotaGammaTilde,
}

impl ReciprocalType {
    pub const ALL: [ReciprocalType; 4] = [
        ReciprocalType::Symmetric,
        ReciprocalType::PReciprocal,
        ReciprocalType::MixedNoPower,
        ReciprocalType::PowerOfIotaGammaTilde,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ReciprocalType::Symmetric => "symmetric",
            ReciprocalType::PReciprocal => "p-reciprocal",
            ReciprocalType::MixedNoPower => "mixed",
            ReciprocalType::PowerOfIotaGammaTilde => "power",
        }
    }
}

impl fmt::Display for ReciprocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReciprocalType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ReciprocalType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown reciprocal type `{s}`"))
    }
}

/// Every normal-form shape some rotation of a class matches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Shapes {
    pub symmetric: bool,
    pub p_reciprocal: bool,
    pub mixed: bool,
    pub power: bool,
}

impl Shapes {
    pub fn any(&self) -> bool {
        self.symmetric || self.p_reciprocal || self.mixed || self.power
    }

    /// Single label, by precedence power > p-reciprocal > mixed > symmetric.
    pub fn label(&self) -> Option<ReciprocalType> {
        if self.power {
            Some(ReciprocalType::PowerOfIotaGammaTilde)
        } else if self.p_reciprocal {
            Some(ReciprocalType::PReciprocal)
        } else if self.mixed {
            Some(ReciprocalType::MixedNoPower)
        } else if self.symmetric {
            Some(ReciprocalType::Symmetric)
        } else {
            None
        }
    }

    pub fn contains(&self, t: ReciprocalType) -> bool {
        match t {
            ReciprocalType::Symmetric => self.symmetric,
            ReciprocalType::PReciprocal => self.p_reciprocal,
            ReciprocalType::MixedNoPower => self.mixed,
            ReciprocalType::PowerOfIotaGammaTilde => self.power,
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        ReciprocalType::ALL
            .into_iter()
            .filter(|t| self.contains(*t))
            .map(|t| t.as_str())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub rtype: ReciprocalType,
    pub shapes: Shapes,
    /// Tuple of the first rotation (from the canonical one) in the labelled
    /// shape; `None` for powers of `i g^r`.
    pub tuple: Option<ExponentTuple>,
}

/// `c = (k, -rev k)`
pub(crate) fn is_symmetric_shape(c: &[i32], params: &HeckeParams) -> bool {
    let m = c.len();
    if m < 2 || m % 2 == 1 {
        return false;
    }
    let n = m / 2;
    (0..n).all(|i| c[n + i] == params.negate(c[n - 1 - i]))
}

/// `c = (r, k, r, -rev k)`, `|k| >= 1`
pub(crate) fn is_p_reciprocal_shape(c: &[i32], params: &HeckeParams) -> bool {
    let Some(t) = params.tilde() else {
        return false;
    };
    let m = c.len();
    if m < 4 || m % 2 == 1 {
        return false;
    }
    let n = (m - 2) / 2;
    c[0] == t && c[n + 1] == t && (0..n).all(|i| c[n + 2 + i] == params.negate(c[n - i]))
}

/// `c = (r, k, -rev k)`, `|k| >= 1`
pub(crate) fn is_mixed_left_shape(c: &[i32], params: &HeckeParams) -> bool {
    let Some(t) = params.tilde() else {
        return false;
    };
    let m = c.len();
    if m < 3 || m.is_multiple_of(2) {
        return false;
    }
    let n = (m - 1) / 2;
    c[0] == t && (0..n).all(|i| c[n + 1 + i] == params.negate(c[n - i]))
}

/// `c = (k, r, -rev k)`, `|k| >= 1`
pub(crate) fn is_mixed_right_shape(c: &[i32], params: &HeckeParams) -> bool {
    let Some(t) = params.tilde() else {
        return false;
    };
    let m = c.len();
    if m < 3 || m.is_multiple_of(2) {
        return false;
    }
    let n = (m - 1) / 2;
    c[n] == t && (0..n).all(|i| c[n + 1 + i] == params.negate(c[n - 1 - i]))
}

pub(crate) fn is_power_shape(c: &[i32], params: &HeckeParams) -> bool {
    params
        .tilde()
        .is_some_and(|t| !c.is_empty() && c.iter().all(|&k| k == t))
}

/// Distinct rotations of a syllable cycle, starting from the given one.
fn distinct_rotations(c: &[i32]) -> impl Iterator<Item = Vec<i32>> + '_ {
    let d = crate::group::cyclic_period(c);
    (0..d).map(move |s| {
        let mut v = c.to_vec();
        v.rotate_left(s);
        v
    })
}

fn hyperbolic_syllables(key: &ClassKey) -> Result<Vec<i32>> {
    if !key.is_hyperbolic() {
        return Err(Error::TorsionInput);
    }
    Ok(key.syllables())
}

fn ensure_reciprocal(key: &ClassKey, params: &HeckeParams) -> Result<()> {
    if is_reciprocal(&key.cyclic_word().to_word(), params)? {
        Ok(())
    } else {
        Err(Error::NotReciprocal(key.to_string()))
    }
}

/// Shapes matched by any rotation, the precedence label and its tuple.
pub fn classify_shapes(key: &ClassKey, params: &HeckeParams) -> Result<Classification> {
    let c = hyperbolic_syllables(key)?;
    ensure_reciprocal(key, params)?;
    let mut shapes = Shapes {
        power: is_power_shape(&c, params),
        ..Shapes::default()
    };
    let mut first_sym = None;
    let mut first_prec = None;
    let mut first_mixed = None;
    for rot in distinct_rotations(&c) {
        if is_symmetric_shape(&rot, params) {
            shapes.symmetric = true;
            first_sym.get_or_insert_with(|| rot[..rot.len() / 2].to_vec());
        }
        if is_p_reciprocal_shape(&rot, params) {
            shapes.p_reciprocal = true;
            first_prec.get_or_insert_with(|| rot[1..rot.len() / 2].to_vec());
        }
        if is_mixed_left_shape(&rot, params) {
            shapes.mixed = true;
            first_mixed.get_or_insert_with(|| rot[1..=rot.len() / 2].to_vec());
        }
        if is_mixed_right_shape(&rot, params) {
            shapes.mixed = true;
        }
    }
    let rtype = shapes.label().ok_or_else(|| {
        Error::Invariant(format!(
            "reciprocal class `{key}` matches no normal-form shape"
        ))
    })?;
    let tuple = match rtype {
        ReciprocalType::Symmetric => first_sym,
        ReciprocalType::PReciprocal => first_prec,
        ReciprocalType::MixedNoPower => first_mixed,
        ReciprocalType::PowerOfIotaGammaTilde => None,
    }
    .map(ExponentTuple::from_unchecked);
    Ok(Classification {
        rtype,
        shapes,
        tuple,
    })
}

/// Reciprocal type of a class, by shape precedence.
pub fn classify_class(key: &ClassKey, params: &HeckeParams) -> Result<ReciprocalType> {
    classify_shapes(key, params).map(|c| c.rtype)
}

/// Number of distinct `i`-led rotations matching each shape, for the class
/// word (`[0]`) and its inverse (`[1]`).
///
/// When the class is a power of `i g^r` its rotations are that unique power
/// representative, so the other shape counts are reported as zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StructureReport {
    pub power: bool,
    pub symmetric: [usize; 2],
    pub p_reciprocal: [usize; 2],
    pub mixed: [usize; 2],
}

pub fn structure_check(key: &ClassKey, params: &HeckeParams) -> Result<StructureReport> {
    let c = hyperbolic_syllables(key)?;
    ensure_reciprocal(key, params)?;
    if is_power_shape(&c, params) {
        return Ok(StructureReport {
            power: true,
            ..StructureReport::default()
        });
    }
    let inverse = key.cyclic_word().inverse(params).syllables();
    let mut report = StructureReport::default();
    for (side, cycle) in [c, inverse].iter().enumerate() {
        for rot in distinct_rotations(cycle) {
            report.symmetric[side] += usize::from(is_symmetric_shape(&rot, params));
            report.p_reciprocal[side] += usize::from(is_p_reciprocal_shape(&rot, params));
            report.mixed[side] += usize::from(
                is_mixed_left_shape(&rot, params) || is_mixed_right_shape(&rot, params),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_reduce, parse_word, CyclicWord};

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    fn key(s: &str, params: &HeckeParams) -> ClassKey {
        let w = parse_word(s, params).unwrap();
        cyclic_reduce(&w, params).unwrap().0.canonical_form()
    }

    #[test]
    fn classify_examples() {
        let p3 = p(3);
        assert_eq!(
            classify_class(&key("i g^1 i g^-1", &p3), &p3).unwrap(),
            ReciprocalType::Symmetric
        );
        let p4 = p(4);
        assert_eq!(
            classify_class(&key("i g^2 i g^1 i g^2 i g^-1", &p4), &p4).unwrap(),
            ReciprocalType::PReciprocal
        );
        assert_eq!(
            classify_class(&key("i g^2 i g^2", &p4), &p4).unwrap(),
            ReciprocalType::PowerOfIotaGammaTilde
        );
        assert_eq!(
            classify_class(&key("i g^2", &p4), &p4).unwrap(),
            ReciprocalType::PowerOfIotaGammaTilde
        );
        let p6 = p(6);
        assert_eq!(
            classify_class(&key("i g^3 i g^1 i g^-1", &p6), &p6).unwrap(),
            ReciprocalType::MixedNoPower
        );
    }

    #[test]
    fn classify_errors() {
        let p3 = p(3);
        assert!(matches!(
            classify_class(&key("i g^1 i g^1", &p3), &p3),
            Err(Error::NotReciprocal(_))
        ));
        assert_eq!(
            classify_class(&key("i", &p3), &p3),
            Err(Error::TorsionInput)
        );
    }

    #[test]
    fn classify_records_tuple_and_shapes() {
        let p4 = p(4);
        // (1, 2, -1) repeated: symmetric and p-reciprocal at once
        let k = CyclicWord::from_syllables(&[1, 2, -1, 1, 2, -1]).canonical_form();
        let c = classify_shapes(&k, &p4).unwrap();
        assert!(c.shapes.symmetric && c.shapes.p_reciprocal);
        assert!(!c.shapes.power && !c.shapes.mixed);
        assert_eq!(c.rtype, ReciprocalType::PReciprocal);
        assert_eq!(c.shapes.names(), vec!["symmetric", "p-reciprocal"]);

        let p5 = p(5);
        let k = CyclicWord::from_syllables(&[2, -1, 1, -2]).canonical_form();
        let c = classify_shapes(&k, &p5).unwrap();
        assert_eq!(c.rtype, ReciprocalType::Symmetric);
        let t = c.tuple.unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.weight(), 10);
    }

    #[test]
    fn structure_examples() {
        let p3 = p(3);
        let r = structure_check(&key("i g^1 i g^-1", &p3), &p3).unwrap();
        assert_eq!(r.symmetric, [2, 2]);
        assert!(!r.power);

        let p4 = p(4);
        let r = structure_check(&key("i g^2 i g^2", &p4), &p4).unwrap();
        assert!(r.power);
        assert_eq!(r.symmetric, [0, 0]);

        let k = CyclicWord::from_syllables(&[1, 1, -1, -1]).canonical_form();
        assert_eq!(structure_check(&k, &p3).unwrap().symmetric, [2, 2]);

        assert!(matches!(
            structure_check(&key("i g^1 i g^1", &p3), &p3),
            Err(Error::NotReciprocal(_))
        ));
    }

    #[test]
    fn reciprocal_type_round_trip() {
        for t in ReciprocalType::ALL {
            assert_eq!(t.as_str().parse::<ReciprocalType>().unwrap(), t);
        }
        assert!("other".parse::<ReciprocalType>().is_err());
    }
}
