use super::{cyclic_reduce, HeckeParams, Letter, Word};
use crate::error::{Error, Result};

/// Conjugacy test in the free product.
///
/// Hyperbolic elements are conjugate exactly when their cyclically reduced
/// cores are rotations of each other. Torsion cores (one letter) are
/// conjugate only to themselves, since both factors are abelian.
pub fn are_conjugate(a: &Word, b: &Word, params: &HeckeParams) -> bool {
    match (a.is_identity(), b.is_identity()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    let (ca, _) = cyclic_reduce(a, params).expect("non-identity");
    let (cb, _) = cyclic_reduce(b, params).expect("non-identity");
    if ca.len() != cb.len() || ca.word_length() != cb.word_length() {
        return false;
    }
    if !ca.is_hyperbolic() {
        return ca == cb;
    }
    ca.canonical_form() == cb.canonical_form()
}

/// Whether `w` is conjugate to its own inverse.
pub fn is_reciprocal(w: &Word, params: &HeckeParams) -> Result<bool> {
    if w.is_identity() {
        return Err(Error::IdentityInput);
    }
    let (core, _) = cyclic_reduce(w, params)?;
    if !core.is_hyperbolic() {
        return Ok(match core.letters()[0] {
            Letter::Iota => true,
            Letter::Gamma(k) => params.negate(k) == k,
        });
    }
    Ok(are_conjugate(w, &w.inverse(params), params))
}
