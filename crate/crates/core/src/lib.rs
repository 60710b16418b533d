//! Reciprocal conjugacy classes in the Hecke groups `Z_2 * Z_p`: exact
//! enumeration by word length, exact counts through a weight recurrence,
//! and central-limit growth estimates.

pub mod asymptotics;
pub mod counting;
pub mod error;
pub mod group;
pub mod recip;
pub mod scalar;

pub use error::{Error, Result};

/// Double-precision estimate.
pub type Estimate = asymptotics::EstimateValue<f64>;
/// Single-precision estimate.
pub type EstimateF32 = asymptotics::EstimateValue<f32>;
/// Arbitrary-precision weight counts.
pub type ExactTable = counting::WeightCountTable<num_bigint::BigUint>;
/// Growth parameters as exact big rationals.
pub type ExactCltParams = asymptotics::CltParams<num_bigint::BigInt>;
/// Growth parameters as machine rationals; fine for small `r`.
pub type SmallCltParams = asymptotics::CltParams<i64>;
