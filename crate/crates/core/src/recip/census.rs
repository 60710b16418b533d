use num_bigint::BigUint;

use super::enumerate::ReciprocalClassRecord;
use super::shape::ReciprocalType;

/// Totals split by primitivity.
pub trait ClassCounts {
    fn total(&self) -> BigUint;
    fn primitive(&self) -> BigUint;

    fn nonprimitive(&self) -> BigUint {
        self.total() - self.primitive()
    }
}

/// `(primitive, non-primitive)` among the given classes.
pub fn split_primitive_counts(classes: &[ReciprocalClassRecord]) -> (u64, u64) {
    let prim = classes.iter().filter(|c| c.primitive).count() as u64;
    (prim, classes.len() as u64 - prim)
}

/// Tallies of an enumerated class list, by label and by shape membership.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassCensus {
    pub total: u64,
    pub primitive: u64,
    /// Indexed like [`ReciprocalType::ALL`].
    pub by_label: [u64; 4],
    /// Classes having at least one rotation in each shape.
    pub by_shape: [u64; 4],
}

fn index(t: ReciprocalType) -> usize {
    ReciprocalType::ALL
        .iter()
        .position(|&u| u == t)
        .expect("listed")
}

impl ClassCensus {
    pub fn new(classes: &[ReciprocalClassRecord]) -> Self {
        let mut c = ClassCensus::default();
        for rec in classes {
            c.total += 1;
            c.primitive += u64::from(rec.primitive);
            c.by_label[index(rec.rtype)] += 1;
            for t in ReciprocalType::ALL {
                c.by_shape[index(t)] += u64::from(rec.shapes.contains(t));
            }
        }
        c
    }

    pub fn labelled(&self, t: ReciprocalType) -> u64 {
        self.by_label[index(t)]
    }

    pub fn with_shape(&self, t: ReciprocalType) -> u64 {
        self.by_shape[index(t)]
    }
}

impl ClassCounts for ClassCensus {
    fn total(&self) -> BigUint {
        self.total.into()
    }

    fn primitive(&self) -> BigUint {
        self.primitive.into()
    }
}

/// The three sides of `|Sym| <= |T| <= |Sym| + |Rec| + |SR|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sandwich {
    pub symmetric: u64,
    pub total: u64,
    pub p_reciprocal: u64,
    /// Classes reversed by both kinds of involution.
    pub both: u64,
}

impl Sandwich {
    pub fn holds(&self) -> bool {
        self.symmetric <= self.total
            && self.total <= self.symmetric + self.p_reciprocal + self.both
    }
}

/// Sandwich terms from single labels; powers of `i g^r` go with the
/// classes reversed by both kinds.
pub fn sandwich_by_label(census: &ClassCensus) -> Sandwich {
    Sandwich {
        symmetric: census.labelled(ReciprocalType::Symmetric),
        total: census.total,
        p_reciprocal: census.labelled(ReciprocalType::PReciprocal),
        both: census.labelled(ReciprocalType::MixedNoPower)
            + census.labelled(ReciprocalType::PowerOfIotaGammaTilde),
    }
}

/// Sandwich terms from shape membership, where one class may be counted in
/// several terms.
pub fn sandwich_by_shape(census: &ClassCensus) -> Sandwich {
    Sandwich {
        symmetric: census.with_shape(ReciprocalType::Symmetric),
        total: census.total,
        p_reciprocal: census.with_shape(ReciprocalType::PReciprocal),
        both: census.with_shape(ReciprocalType::MixedNoPower)
            + census.with_shape(ReciprocalType::PowerOfIotaGammaTilde),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::HeckeParams;
    use crate::recip::enumerate_reciprocal_classes;

    #[test]
    fn primitive_split_examples() {
        let p3 = HeckeParams::new(3).unwrap();
        let split = |x| split_primitive_counts(&enumerate_reciprocal_classes(&p3, x).unwrap());
        assert_eq!(split(4), (1, 0));
        assert_eq!(split(8), (2, 1));
        assert_eq!(split(12), (5, 2));
    }

    #[test]
    fn census_totals() {
        let p4 = HeckeParams::new(4).unwrap();
        let recs = enumerate_reciprocal_classes(&p4, 12).unwrap();
        let c = ClassCensus::new(&recs);
        assert_eq!(c.total, recs.len() as u64);
        assert_eq!(c.by_label.iter().sum::<u64>(), c.total);
        assert_eq!(c.nonprimitive() + c.primitive(), c.total());
        assert!(sandwich_by_label(&c).holds());
        assert!(sandwich_by_shape(&c).holds());
    }
}
