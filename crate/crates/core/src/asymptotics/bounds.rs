use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::counting::dp_class_counts;
use crate::error::{Error, Result};
use crate::group::HeckeParams;
use crate::recip::{enumerate_reciprocal_classes, split_primitive_counts, ClassCounts};

/// Exact `(total, primitive)` reciprocal class counts up to length `x`:
/// from the tuple recurrence for odd `p`, by enumeration for even `p`.
pub fn reciprocal_class_counts(params: &HeckeParams, x: u32) -> Result<(BigUint, BigUint)> {
    if params.is_even() {
        let recs = enumerate_reciprocal_classes(params, x)?;
        let (prim, non) = split_primitive_counts(&recs);
        Ok(((prim + non).into(), prim.into()))
    } else {
        let c = dp_class_counts(params, x)?;
        Ok((c.total(), c.primitive()))
    }
}

/// Non-primitive classes against `c * |W_(x/2)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerBoundReport {
    pub x: u32,
    pub nonprimitive: BigUint,
    pub half_total: BigUint,
    /// `x(x+1)/2 * |W_(x/2)|`
    pub rhs: BigUint,
    /// `2x(x+1) * |W_(x/2)|`
    pub rhs_loose: BigUint,
    pub holds: bool,
    pub holds_loose: bool,
}

pub fn check_lemma71(params: &HeckeParams, x: u32) -> Result<PowerBoundReport> {
    let (total, prim) = reciprocal_class_counts(params, x)?;
    let (half_total, _) = reciprocal_class_counts(params, x / 2)?;
    let nonprimitive = total - prim;
    let x64 = u64::from(x);
    let rhs = &half_total * BigUint::from(x64 * (x64 + 1) / 2);
    let rhs_loose = &half_total * BigUint::from(2 * x64 * (x64 + 1));
    Ok(PowerBoundReport {
        x,
        holds: nonprimitive <= rhs,
        holds_loose: nonprimitive <= rhs_loose,
        nonprimitive,
        half_total,
        rhs,
        rhs_loose,
    })
}

/// Smallest `C` with `2 |W_(x/2)|^2 <= C^2 |W_x|`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareBoundReport {
    pub x: u32,
    pub total: BigUint,
    pub half_total: BigUint,
    /// `C^2`, exactly.
    pub min_c_squared: BigRational,
    pub min_c: f64,
}

pub fn check_lemma72(params: &HeckeParams, x: u32) -> Result<SquareBoundReport> {
    let (total, _) = reciprocal_class_counts(params, x)?;
    if total.is_zero() {
        return Err(Error::EmptyCount(x));
    }
    let (half_total, _) = reciprocal_class_counts(params, x / 2)?;
    let h = BigInt::from(half_total.clone());
    let c2 = BigRational::new(h.clone() * h * 2, BigInt::from(total.clone()));
    let min_c = ratio_to_f64(&c2).sqrt();
    Ok(SquareBoundReport {
        x,
        total,
        half_total,
        min_c_squared: c2,
        min_c,
    })
}

pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `|W^p_x| / |W_x|` for each `x`, `None` where there are no classes.
pub fn primitive_ratio_series(
    params: &HeckeParams,
    grid: &[u32],
) -> Result<Vec<(u32, Option<BigRational>)>> {
    grid.iter()
        .map(|&x| {
            let (total, prim) = reciprocal_class_counts(params, x)?;
            let ratio = (!total.is_zero())
                .then(|| BigRational::new(BigInt::from(prim), BigInt::from(total)));
            Ok((x, ratio))
        })
        .collect()
}
