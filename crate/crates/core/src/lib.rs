//! Perfect periodic autocorrelation sequences over roots of unity.
//!
//! Sequences are stored as integer exponents of a primitive `N`-th root of
//! unity, so correlations can be checked exactly: each correlation value is a
//! [`RootMultiset`] whose vanishing is decided by cyclotomic divisibility.
//! FFT correlation gives the same values numerically in `O(L log L)`.
//!
//! Numeric routines are generic over [`Real`] (`f32` or `f64`); exact
//! polynomial arithmetic is generic over [`Coefficient`] (`i64`, `i128`,
//! `BigInt`). The aliases below fix the common choices.

pub mod aop;
pub mod correlation;
pub mod exact;
pub mod generators;
pub mod scalar;
pub mod scan;
pub mod sequence;
pub mod verdict;

pub use aop::{aop_condition1, aop_condition2, aop_verdict, column_cross_correlation, fold, AopError, AopReport};
pub use correlation::{
    array_autocorrelation_2d, autocorrelation_fft, autocorrelation_profile_exact, cross_correlation_exact,
    is_perfect_array, is_perfect_exact, max_offpeak_magnitude, CorrelationError, ExactLimits,
};
pub use exact::{
    cyclotomic, is_zero_sum, multiset_add, root_value, ExactError, IntPolynomial, Polynomial, RootMultiset,
    RootOrder, ZeroTest,
};
pub use generators::{
    blake_tirkel_array, blake_tirkel_sequence, chu, frank, milewski, phase_efficiency, validate_params,
    Construction, ConstructionError, ConstructionParams,
};
pub use scalar::{Coefficient, Real};
pub use sequence::{ExponentArray, ExponentSequence, SequenceError};
pub use verdict::Verdict;

pub use num_complex::Complex;
pub use num_rational::Ratio;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;
pub type CorrelationProfile64 = correlation::CorrelationProfile<f64>;
pub type CorrelationProfile32 = correlation::CorrelationProfile<f32>;
/// Polynomial with arbitrary-precision coefficients.
pub type BigPolynomial = Polynomial<num_bigint::BigInt>;
pub type WidePolynomial = Polynomial<i128>;
/// Exact phase efficiency (length over number of phases).
pub type Efficiency = Ratio<u64>;
