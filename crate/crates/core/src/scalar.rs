//! Scalar abstractions shared by the numeric and exact paths.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Float, FloatConst, One, Zero};
use rustfft::FftNum;

/// Floating point type used for numeric evaluation and FFT correlation: f32 or f64.
pub trait Real: Float + FloatConst + FftNum + Debug + Send + Sync {}

impl<T> Real for T where T: Float + FloatConst + FftNum + Debug + Send + Sync {}

/// Exact integer coefficient ring for polynomial arithmetic.
///
/// Every arithmetic step goes through the checked operations, so a fixed-width
/// coefficient type reports overflow instead of wrapping. `BigInt` never overflows.
pub trait Coefficient:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Neg<Output = Self>
    + From<i64>
    + Send
    + Sync
{
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}
