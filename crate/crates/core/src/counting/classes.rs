use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use super::{dp_weight_counts, syllable_alphabet, Setting, WeightCountTable};
use crate::error::{Error, Result};
use crate::group::{HeckeParams, Parity};
use crate::recip::ClassCounts;

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n > 0, "mobius(0) is undefined");
    let mut n = n;
    let mut sign = 1i8;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn to_unsigned(v: BigInt, what: &str) -> Result<BigUint> {
    if v.is_negative() {
        return Err(Error::Invariant(format!("{what} came out negative: {v}")));
    }
    Ok(v.magnitude().clone())
}

/// Exact number of classes with a symmetric normal form, for every bound
/// up to a fixed maximum.
///
/// Each such class is reached by one tuple per symmetric rotation of its
/// word. That is two tuples, except for the powers of an odd-length block
/// `(c, r, -rev c)` (even `p` only), whose words have a single symmetric
/// rotation. So the class count is `(tuples + single) / 2`.
#[derive(Clone, Debug)]
pub struct SymmetricClassCounter {
    x: u32,
    table: WeightCountTable<BigUint>,
    /// `(w, n)`: `n` primitive odd-length self-mirror blocks of weight `w`.
    blocks: Vec<(u32, BigInt)>,
}

impl SymmetricClassCounter {
    pub fn new(params: &HeckeParams, x: u32) -> Result<Self> {
        let setting = Setting::symmetric_for(params);
        let alphabet = syllable_alphabet(params, setting)?;
        let table = dp_weight_counts::<BigUint>(&alphabet, x);
        let blocks = match params.parity() {
            Parity::Odd => Vec::new(),
            Parity::Even => primitive_blocks(&table, 2 * (params.r() + 1), x),
        };
        Ok(Self { x, table, blocks })
    }

    pub fn bound(&self) -> u32 {
        self.x
    }

    pub fn table(&self) -> &WeightCountTable<BigUint> {
        &self.table
    }

    /// Symmetric tuples of weight at most `y`.
    pub fn tuples(&self, y: u32) -> BigUint {
        self.table.cumulative(y.min(self.x))
    }

    /// Tuples of weight at most `y` whose word has one symmetric rotation.
    pub fn single_rotation_tuples(&self, y: u32) -> BigUint {
        let y = y.min(self.x);
        let total: BigInt = self
            .blocks
            .iter()
            .map(|(w, n)| n * BigInt::from(y / w))
            .sum();
        total.magnitude().clone()
    }

    /// Classes of length at most `y` with a symmetric normal form.
    pub fn count(&self, y: u32) -> Result<BigUint> {
        let y = y.min(self.x);
        let sum = self.tuples(y) + self.single_rotation_tuples(y);
        if (&sum % 2u32).is_zero() {
            Ok(sum / 2u32)
        } else {
            Err(Error::Invariant(format!(
                "odd symmetric tuple total {sum} at x = {y}"
            )))
        }
    }
}

/// Counts primitive blocks `(c, r, -rev c)` by weight, where the weight of
/// `c` is read from the per-length table and `top` is the weight of `r`.
fn primitive_blocks(table: &WeightCountTable<BigUint>, top: u32, x: u32) -> Vec<(u32, BigInt)> {
    // all blocks (primitive or not) of odd length d and weight w
    let all = |d: usize, w: u32| -> BigInt {
        if w < top || (w - top) % 2 == 1 {
            return BigInt::zero();
        }
        BigInt::from_biguint(Sign::Plus, table.at_len((d - 1) / 2, (w - top) / 2))
    };
    let mut out = Vec::new();
    let mut d = 1usize;
    while top as usize + 4 * (d - 1) <= x as usize {
        for w in top..=x {
            let mut n = BigInt::zero();
            for e in 1..=d {
                if !d.is_multiple_of(e) || !(w as usize).is_multiple_of(d / e) {
                    continue;
                }
                let mu = mobius((d / e) as u64);
                if mu != 0 {
                    n += all(e, (w as usize * e / d) as u32) * mu;
                }
            }
            if !n.is_zero() {
                out.push((w, n));
            }
        }
        d += 2;
    }
    out
}

/// Classes of length at most `x` with a symmetric normal form.
pub fn symmetric_class_count_exact(params: &HeckeParams, x: u32) -> Result<BigUint> {
    SymmetricClassCounter::new(params, x)?.count(x)
}

/// Primitive part of a cumulative class count: `sum_k mu(k) W(x / k)`.
///
/// Valid for any family closed under taking roots, such as the reciprocal
/// classes.
pub fn primitive_from_totals(
    x: u32,
    mut totals: impl FnMut(u32) -> Result<BigUint>,
) -> Result<BigUint> {
    let mut acc = BigInt::zero();
    for k in 1..=x.max(1) {
        let mu = mobius(k as u64);
        if mu == 0 {
            continue;
        }
        let w = totals(x / k)?;
        if w.is_zero() {
            break;
        }
        acc += BigInt::from_biguint(Sign::Plus, w) * mu;
    }
    to_unsigned(acc, "primitive count")
}

/// Reciprocal class counts of an odd `p`, where every reciprocal class has a
/// symmetric normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpClassCounts {
    pub x: u32,
    pub total: BigUint,
    pub primitive: BigUint,
}

pub fn dp_class_counts(params: &HeckeParams, x: u32) -> Result<DpClassCounts> {
    if params.is_even() {
        return Err(Error::ParityMismatch {
            what: "total reciprocal count by tuples",
            expected: Parity::Odd,
            p: params.p(),
        });
    }
    let counter = SymmetricClassCounter::new(params, x)?;
    let total = counter.count(x)?;
    let primitive = primitive_from_totals(x, |y| counter.count(y))?;
    Ok(DpClassCounts {
        x,
        total,
        primitive,
    })
}

impl ClassCounts for DpClassCounts {
    fn total(&self) -> BigUint {
        self.total.clone()
    }

    fn primitive(&self) -> BigUint {
        self.primitive.clone()
    }
}
