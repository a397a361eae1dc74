//! Periodic correlation, exact and numeric.
//!
//! For sequences `a`, `b` of length `L`, `θ_{a,b}(τ) = Σ_i a_i · conj(b_{(i+τ) mod L})`
//! and `θ_s = θ_{s,s}`. The exact path returns each value as a [`RootMultiset`]
//! and decides vanishing symbolically. The FFT path computes all `L` values in
//! `O(L log L)` through `θ_{a,b} = DFT(A · conj(B)) / L` with `A = DFT(a)`,
//! `B = DFT(b)`; rustfft handles arbitrary lengths.

use num_complex::Complex;
use rayon::prelude::*;
use rustfft::FftPlanner;
use thiserror::Error;

use crate::exact::{RootMultiset, RootOrder, RootTable, ZeroTest};
use crate::scalar::Real;
use crate::sequence::{ExponentArray, ExponentSequence};
use crate::verdict::Verdict;

/// Default cap on the length processed by the quadratic exact path.
pub const DEFAULT_EXACT_MAX_LENGTH: usize = 20_000;

/// `max_offpeak <= NUMERIC_PERFECTION_RELATIVE · L` counts as numerically perfect.
pub const NUMERIC_PERFECTION_RELATIVE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrelationError {
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("root orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("exact correlation of {size} terms exceeds the limit of {limit}")]
    ExactLimit { size: usize, limit: usize },
}

/// Size cap for the exact `O(L²)` routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_length: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits { max_length: DEFAULT_EXACT_MAX_LENGTH }
    }
}

impl ExactLimits {
    pub fn unlimited() -> Self {
        ExactLimits { max_length: usize::MAX }
    }

    fn check(&self, size: usize) -> Result<(), CorrelationError> {
        if size > self.max_length {
            return Err(CorrelationError::ExactLimit { size, limit: self.max_length });
        }
        Ok(())
    }
}

#[inline]
fn diff(a: u64, b: u64, n: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + n - b
    }
}

#[inline]
fn reduce_shift(tau: i64, len: usize) -> usize {
    tau.rem_euclid(len as i64) as usize
}

/// Exact `θ_{a,b}(τ)`: one count at `a_i - b_{i+τ} mod N` for every `i`.
pub fn cross_correlation_exact(
    a: &ExponentSequence,
    b: &ExponentSequence,
    tau: i64,
) -> Result<RootMultiset, CorrelationError> {
    if a.len() != b.len() {
        return Err(CorrelationError::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.order() != b.order() {
        return Err(CorrelationError::OrderMismatch { left: a.order().get(), right: b.order().get() });
    }
    Ok(cyclic_cross(a.exps(), b.exps(), a.order(), reduce_shift(tau, a.len())))
}

/// Exact `θ_s(τ)`.
pub fn autocorrelation_exact(s: &ExponentSequence, tau: i64) -> RootMultiset {
    cyclic_cross(s.exps(), s.exps(), s.order(), reduce_shift(tau, s.len()))
}

pub(crate) fn cyclic_cross(a: &[u64], b: &[u64], order: RootOrder, tau: usize) -> RootMultiset {
    let mut ms = RootMultiset::zero(order);
    accumulate_cross(&mut ms, a, b, tau);
    ms
}

/// Adds the terms of `θ_{a,b}(τ)` into `ms`; `tau` must already be in `[0, len)`.
pub(crate) fn accumulate_cross(ms: &mut RootMultiset, a: &[u64], b: &[u64], tau: usize) {
    let n = ms.order().get();
    let (b_head, b_tail) = b.split_at(tau);
    for (&x, &y) in a.iter().zip(b_tail.iter().chain(b_head)) {
        ms.bump(diff(x, y, n));
    }
}

/// One shift of a [`CorrelationProfile`].
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftValue<F> {
    pub multiset: RootMultiset,
    pub value: Complex<F>,
}

/// Exact autocorrelation at every shift, with evaluated values.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile<F> {
    order: RootOrder,
    shifts: Vec<ShiftValue<F>>,
}

impl<F: Real> CorrelationProfile<F> {
    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn shift(&self, tau: i64) -> &ShiftValue<F> {
        &self.shifts[reduce_shift(tau, self.shifts.len())]
    }

    pub fn shifts(&self) -> &[ShiftValue<F>] {
        &self.shifts
    }

    pub fn peak(&self) -> &ShiftValue<F> {
        &self.shifts[0]
    }

    pub fn values(&self) -> Vec<Complex<F>> {
        self.shifts.iter().map(|s| s.value).collect()
    }

    /// Smallest off-peak shift whose value is not exactly zero.
    pub fn first_nonzero_offpeak(&self) -> Option<usize> {
        let test = ZeroTest::new(self.order);
        (1..self.shifts.len()).find(|&t| !test.is_zero(&self.shifts[t].multiset))
    }
}

pub fn autocorrelation_profile_exact<F: Real>(
    s: &ExponentSequence,
) -> Result<CorrelationProfile<F>, CorrelationError> {
    autocorrelation_profile_exact_with(s, &ExactLimits::default())
}

pub fn autocorrelation_profile_exact_with<F: Real>(
    s: &ExponentSequence,
    limits: &ExactLimits,
) -> Result<CorrelationProfile<F>, CorrelationError> {
    limits.check(s.len())?;
    let table = RootTable::<F>::new(s.order());
    let shifts = (0..s.len())
        .into_par_iter()
        .map(|tau| {
            let multiset = cyclic_cross(s.exps(), s.exps(), s.order(), tau);
            let value = table.evaluate(&multiset);
            ShiftValue { multiset, value }
        })
        .collect();
    Ok(CorrelationProfile { order: s.order(), shifts })
}

/// Exact perfectness: every off-peak autocorrelation vanishes. The witness is
/// the smallest failing shift.
pub fn is_perfect_exact(s: &ExponentSequence) -> Result<Verdict<usize>, CorrelationError> {
    is_perfect_exact_with(s, &ExactLimits::default())
}

pub fn is_perfect_exact_with(
    s: &ExponentSequence,
    limits: &ExactLimits,
) -> Result<Verdict<usize>, CorrelationError> {
    limits.check(s.len())?;
    let test = ZeroTest::new(s.order());
    let witness = (1..s.len())
        .into_par_iter()
        .find_first(|&tau| !test.is_zero(&cyclic_cross(s.exps(), s.exps(), s.order(), tau)));
    Ok(Verdict::from_witness(witness))
}

fn forward<F: Real>(planner: &mut FftPlanner<F>, buf: &mut [Complex<F>]) {
    planner.plan_fft_forward(buf.len()).process(buf);
}

/// All `L` autocorrelation values through the frequency domain. Each entry
/// carries an absolute error of roughly `c · log L · ε · L`.
pub fn autocorrelation_fft<F: Real>(s: &ExponentSequence) -> Vec<Complex<F>> {
    autocorrelation_fft_complex(&s.to_complex())
}

/// [`autocorrelation_fft`] for an arbitrary complex input.
pub fn autocorrelation_fft_complex<F: Real>(x: &[Complex<F>]) -> Vec<Complex<F>> {
    let len = x.len();
    if len == 0 {
        return Vec::new();
    }
    let mut planner = FftPlanner::new();
    let mut buf = x.to_vec();
    forward(&mut planner, &mut buf);
    for v in buf.iter_mut() {
        *v = Complex::new(v.norm_sqr(), F::zero());
    }
    forward(&mut planner, &mut buf);
    let scale = F::one() / F::from(len).unwrap();
    buf.iter_mut().for_each(|v| *v = *v * scale);
    buf
}

/// All `L` values of `θ_{a,b}` through the frequency domain.
pub fn cross_correlation_fft<F: Real>(
    a: &ExponentSequence,
    b: &ExponentSequence,
) -> Result<Vec<Complex<F>>, CorrelationError> {
    if a.len() != b.len() {
        return Err(CorrelationError::LengthMismatch { left: a.len(), right: b.len() });
    }
    let len = a.len();
    let mut planner = FftPlanner::new();
    let mut fa = a.to_complex::<F>();
    let mut fb = b.to_complex::<F>();
    forward(&mut planner, &mut fa);
    forward(&mut planner, &mut fb);
    let mut prod: Vec<Complex<F>> = fa.iter().zip(&fb).map(|(x, y)| x * y.conj()).collect();
    forward(&mut planner, &mut prod);
    let scale = F::one() / F::from(len).unwrap();
    Ok(prod.into_iter().map(|v| v * scale).collect())
}

/// `|DFT(s)(f)|²` for every frequency, unnormalized transform.
pub fn power_spectrum<F: Real>(s: &ExponentSequence) -> Vec<F> {
    let mut buf = s.to_complex::<F>();
    let mut planner = FftPlanner::new();
    forward(&mut planner, &mut buf);
    buf.iter().map(|v| v.norm_sqr()).collect()
}

/// `max_{τ≠0} |values[τ]|`; zero when there is no off-peak shift.
pub fn max_offpeak_magnitude<F: Real>(values: &[Complex<F>]) -> F {
    values.iter().skip(1).map(|v| v.norm()).fold(F::zero(), F::max)
}

/// Numeric (advisory) perfectness: off-peak magnitude within `1e-6 · L`.
pub fn is_numerically_perfect<F: Real>(values: &[Complex<F>]) -> bool {
    let threshold = F::from(NUMERIC_PERFECTION_RELATIVE * values.len() as f64).unwrap();
    max_offpeak_magnitude(values) <= threshold
}

/// Exact 2D periodic autocorrelation of an array at shift `(τ1, τ2)`.
pub fn array_autocorrelation_2d(a: &ExponentArray, tau1: i64, tau2: i64) -> RootMultiset {
    let (rows, cols) = (a.rows(), a.cols());
    let (t1, t2) = (reduce_shift(tau1, rows), reduce_shift(tau2, cols));
    let n = a.order().get();
    let mut ms = RootMultiset::zero(a.order());
    for i in 0..rows {
        let ii = (i + t1) % rows;
        for j in 0..cols {
            let jj = (j + t2) % cols;
            ms.bump(diff(a.get(i, j), a.get(ii, jj), n));
        }
    }
    ms
}

/// Every 2D shift other than `(0, 0)` vanishes exactly. The witness is the
/// lexicographically smallest failing `(τ1, τ2)`.
pub fn is_perfect_array(a: &ExponentArray) -> Result<Verdict<(usize, usize)>, CorrelationError> {
    is_perfect_array_with(a, &ExactLimits::default())
}

pub fn is_perfect_array_with(
    a: &ExponentArray,
    limits: &ExactLimits,
) -> Result<Verdict<(usize, usize)>, CorrelationError> {
    let (rows, cols) = (a.rows(), a.cols());
    limits.check(rows * cols)?;
    let test = ZeroTest::new(a.order());
    let witness = (1..rows * cols).into_par_iter().map(|flat| (flat / cols, flat % cols)).find_first(
        |&(t1, t2)| !test.is_zero(&array_autocorrelation_2d(a, t1 as i64, t2 as i64)),
    );
    Ok(Verdict::from_witness(witness))
}

/// Largest `|exact - fft|` over all shifts.
pub fn exact_fft_discrepancy<F: Real>(profile: &CorrelationProfile<F>, fft: &[Complex<F>]) -> F {
    assert_eq!(profile.len(), fft.len(), "profile and fft lengths differ");
    profile
        .shifts()
        .iter()
        .zip(fft)
        .map(|(s, v)| (s.value - v).norm())
        .fold(F::zero(), F::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blake_tirkel_array, blake_tirkel_sequence, chu, frank, ConstructionParams};

    fn ord(n: u64) -> RootOrder {
        RootOrder::new(n).unwrap()
    }

    fn constant(len: usize, n: u64) -> ExponentSequence {
        ExponentSequence::new(ord(n), vec![0; len]).unwrap()
    }

    fn bt(n: u64, m: u64, k: u64) -> ConstructionParams {
        ConstructionParams::new(n, m, k).unwrap()
    }

    #[test]
    fn cross_examples() {
        let s = blake_tirkel_sequence(&bt(2, 1, 1));
        let peak = cross_correlation_exact(&s, &s, 0).unwrap();
        assert_eq!(peak.counts(), &[16, 0, 0, 0]);
        let f = frank(2).unwrap();
        let c = cross_correlation_exact(&f, &f, 1).unwrap();
        assert_eq!(c.counts(), &[2, 2]);
        assert!(c.is_zero_sum());
        assert_eq!(cross_correlation_exact(&s, &s, 16).unwrap(), peak);
        assert_eq!(cross_correlation_exact(&s, &s, -15).unwrap(), autocorrelation_exact(&s, 1));
    }

    #[test]
    fn cross_rejects_mismatch() {
        let a = constant(4, 2);
        assert_eq!(
            cross_correlation_exact(&a, &constant(3, 2), 0),
            Err(CorrelationError::LengthMismatch { left: 4, right: 3 })
        );
        assert_eq!(
            cross_correlation_exact(&a, &constant(4, 3), 0),
            Err(CorrelationError::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn profile_examples() {
        let single = ExponentSequence::new(ord(3), vec![2]).unwrap();
        let p = autocorrelation_profile_exact::<f64>(&single).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p.peak().value - Complex::new(1.0, 0.0)).norm() < 1e-15);

        let p = autocorrelation_profile_exact::<f64>(&blake_tirkel_sequence(&bt(2, 1, 1))).unwrap();
        assert_eq!(p.len(), 16);
        assert!(p.shifts()[1..].iter().all(|s| s.multiset.is_zero_sum()));
        assert_eq!(p.first_nonzero_offpeak(), None);

        let p = autocorrelation_profile_exact::<f64>(&constant(4, 1)).unwrap();
        for s in p.shifts() {
            assert!((s.value - Complex::new(4.0, 0.0)).norm() < 1e-15);
        }
        assert_eq!(p.first_nonzero_offpeak(), Some(1));
    }

    #[test]
    fn perfect_exact_examples() {
        assert_eq!(is_perfect_exact(&blake_tirkel_sequence(&bt(2, 1, 1))), Ok(Verdict::Holds));
        assert_eq!(is_perfect_exact(&chu(3).unwrap()), Ok(Verdict::Holds));
        assert_eq!(is_perfect_exact(&constant(4, 1)), Ok(Verdict::Fails { witness: 1 }));
    }

    #[test]
    fn exact_limit_is_enforced() {
        let s = constant(10, 2);
        let limits = ExactLimits { max_length: 9 };
        assert_eq!(
            is_perfect_exact_with(&s, &limits),
            Err(CorrelationError::ExactLimit { size: 10, limit: 9 })
        );
        assert!(is_perfect_exact_with(&s, &ExactLimits::unlimited()).is_ok());
    }

    #[test]
    fn fft_examples() {
        let v = autocorrelation_fft::<f64>(&constant(4, 1));
        assert!(v.iter().all(|x| (x - Complex::new(4.0, 0.0)).norm() < 1e-12));
        let v = autocorrelation_fft::<f64>(&frank(2).unwrap());
        let want = [4.0, 0.0, 0.0, 0.0];
        for (x, w) in v.iter().zip(want) {
            assert!((x - Complex::new(w, 0.0)).norm() < 1e-12);
        }
        let s = blake_tirkel_sequence(&bt(3, 1, 1));
        let v = autocorrelation_fft::<f64>(&s);
        assert!((v[0].re - s.len() as f64).abs() < 1e-9 * s.len() as f64);
        assert!(autocorrelation_fft_complex::<f64>(&[]).is_empty());
    }

    #[test]
    fn fft_matches_exact_on_imperfect_input() {
        let s = ExponentSequence::new(ord(5), vec![0, 3, 1, 4, 4, 2, 0]).unwrap();
        let p = autocorrelation_profile_exact::<f64>(&s).unwrap();
        let v = autocorrelation_fft::<f64>(&s);
        assert!(exact_fft_discrepancy(&p, &v) < 1e-12);
        let w = cross_correlation_fft::<f64>(&s, &s).unwrap();
        for (x, y) in v.iter().zip(&w) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn cross_fft_matches_exact() {
        let a = ExponentSequence::new(ord(6), vec![0, 1, 5, 2, 3]).unwrap();
        let b = ExponentSequence::new(ord(6), vec![4, 4, 0, 1, 2]).unwrap();
        let fft = cross_correlation_fft::<f64>(&a, &b).unwrap();
        for (tau, v) in fft.iter().enumerate() {
            let exact: Complex<f64> = cross_correlation_exact(&a, &b, tau as i64).unwrap().evaluate();
            assert!((exact - v).norm() < 1e-12, "tau={tau}");
        }
    }

    #[test]
    fn offpeak_magnitude_examples() {
        let c = |re: f64| Complex::new(re, 0.0);
        assert_eq!(max_offpeak_magnitude(&[c(4.0), c(0.0), c(0.0), c(0.0)]), 0.0);
        assert_eq!(max_offpeak_magnitude(&[c(4.0), c(1.0), c(0.0), c(0.0)]), 1.0);
        assert_eq!(max_offpeak_magnitude(&[c(7.0)]), 0.0);
        assert!(is_numerically_perfect(&[c(4.0), c(1e-9), c(0.0), c(0.0)]));
        assert!(!is_numerically_perfect(&[c(4.0), c(1e-3), c(0.0), c(0.0)]));
    }

    #[test]
    fn array_examples() {
        let a = blake_tirkel_array(&bt(2, 1, 1));
        assert_eq!(array_autocorrelation_2d(&a, 0, 0).counts(), &[16, 0, 0, 0]);
        assert_eq!(array_autocorrelation_2d(&a, 8, -2), array_autocorrelation_2d(&a, 0, 0));
        for t1 in 0..8 {
            for t2 in 0..2 {
                if (t1, t2) != (0, 0) {
                    assert!(array_autocorrelation_2d(&a, t1, t2).is_zero_sum(), "({t1},{t2})");
                }
            }
        }
        assert_eq!(is_perfect_array(&a), Ok(Verdict::Holds));
        assert_eq!(is_perfect_array(&blake_tirkel_array(&bt(3, 1, 1))), Ok(Verdict::Holds));
        let zero = ExponentArray::new(ord(2), 2, 2, vec![0; 4]).unwrap();
        assert_eq!(is_perfect_array(&zero), Ok(Verdict::Fails { witness: (0, 1) }));
        let one = ExponentArray::new(ord(2), 1, 1, vec![1]).unwrap();
        assert_eq!(is_perfect_array(&one), Ok(Verdict::Holds));
    }

    #[test]
    fn f32_path_runs() {
        let v = autocorrelation_fft::<f32>(&frank(4).unwrap());
        assert!(max_offpeak_magnitude(&v) < 1e-4);
    }
}
