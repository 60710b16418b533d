//! Exact tuple counts by weight, and the class counts derived from them.

mod alphabet;
mod classes;
mod dp;

pub use alphabet::{syllable_alphabet, Setting, WeightAlphabet};
pub use classes::{
    dp_class_counts, mobius, primitive_from_totals, symmetric_class_count_exact,
    DpClassCounts, SymmetricClassCounter,
};
pub use dp::{count_solutions, dp_weight_counts, WeightCountTable};
