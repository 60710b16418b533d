//! Scalar abstractions shared by the counting and estimation code.
//!
//! Floating-point code is written against [`Real`] so it runs in `f32` or
//! `f64`; tuple counts are written against [`Count`] so the same recurrence
//! yields machine integers, arbitrary-precision integers or floats.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{Float, FloatConst, FromPrimitive, One, Zero};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Complementary error function.
    fn erfc(self) -> Self;

    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal fits the scalar type")
    }
}

impl Real for f64 {
    fn erfc(self) -> f64 {
        libm::erfc(self)
    }
}

impl Real for f32 {
    fn erfc(self) -> f32 {
        libm::erfcf(self)
    }
}

/// Semiring the weight-count recurrence is evaluated in.
pub trait Count:
    Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> + FromPrimitive + Debug
{
}

impl Count for u64 {}
impl Count for u128 {}
impl Count for f64 {}
impl Count for BigUint {}
impl Count for BigInt {}
