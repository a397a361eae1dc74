//! Array orthogonality property (AOP).
//!
//! A sequence of length `L` is folded row by row into an `(L/d) × d` array.
//! The sequence has the AOP for divisor `d` when
//!
//! 1. every pair of distinct columns has zero periodic cross-correlation at
//!    every shift, including shift 0, and
//! 2. the column autocorrelations summed over all columns vanish at every
//!    nonzero shift.
//!
//! The AOP implies perfect periodic autocorrelation; the converse fails in
//! general. [`aop_verdict`] reports both the AOP and the exact perfectness
//! verdict so the implication can be audited.

use rayon::prelude::*;
use thiserror::Error;

use crate::correlation::{accumulate_cross, cyclic_cross, is_perfect_exact_with, CorrelationError, ExactLimits};
use crate::exact::{RootMultiset, ZeroTest};
use crate::sequence::{ExponentArray, ExponentSequence};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AopError {
    #[error("divisor {divisor} does not divide the sequence length {length}")]
    NonDivisor { divisor: usize, length: usize },
    #[error("column {column} is out of range for an array with {cols} columns")]
    ColumnOutOfRange { column: usize, cols: usize },
    #[error("condition 1 needs at least two columns, got {0}")]
    TooFewColumns(usize),
    #[error(transparent)]
    Correlation(#[from] CorrelationError),
}

/// Row-major fold: `rows = L / d`, `cols = d`, `A[i][j] = s[d·i + j]`.
pub fn fold(s: &ExponentSequence, d: usize) -> Result<ExponentArray, AopError> {
    let length = s.len();
    if d == 0 || length % d != 0 {
        return Err(AopError::NonDivisor { divisor: d, length });
    }
    Ok(ExponentArray::from_canonical(s.order(), length / d, d, s.exps().to_vec()))
}

fn columns(a: &ExponentArray) -> Vec<Vec<u64>> {
    (0..a.cols()).map(|j| a.column(j)).collect()
}

/// Exact `θ_{col j1, col j2}(κ)` over the rows of `a`.
pub fn column_cross_correlation(
    a: &ExponentArray,
    j1: usize,
    j2: usize,
    kappa: i64,
) -> Result<RootMultiset, AopError> {
    for column in [j1, j2] {
        if column >= a.cols() {
            return Err(AopError::ColumnOutOfRange { column, cols: a.cols() });
        }
    }
    let shift = kappa.rem_euclid(a.rows() as i64) as usize;
    Ok(cyclic_cross(&a.column(j1), &a.column(j2), a.order(), shift))
}

/// Condition 1. The witness is the first failing `(j1, j2, κ)` with `j1 < j2`,
/// in lexicographic order.
pub fn aop_condition1(a: &ExponentArray) -> Result<Verdict<(usize, usize, usize)>, AopError> {
    let cols = a.cols();
    if cols < 2 {
        return Err(AopError::TooFewColumns(cols));
    }
    let rows = a.rows();
    let data = columns(a);
    let test = ZeroTest::new(a.order());
    let pairs: Vec<(usize, usize)> =
        (0..cols).flat_map(|j1| (j1 + 1..cols).map(move |j2| (j1, j2))).collect();
    let witness = pairs
        .par_iter()
        .flat_map_iter(|&(j1, j2)| (0..rows).map(move |kappa| (j1, j2, kappa)))
        .find_first(|&(j1, j2, kappa)| {
            !test.is_zero(&cyclic_cross(&data[j1], &data[j2], a.order(), kappa))
        });
    Ok(Verdict::from_witness(witness))
}

/// `Σ_j θ_{col j}(κ)` as one multiset.
pub fn summed_column_autocorrelation(a: &ExponentArray, kappa: i64) -> RootMultiset {
    let shift = kappa.rem_euclid(a.rows() as i64) as usize;
    let mut ms = RootMultiset::zero(a.order());
    for col in columns(a) {
        accumulate_cross(&mut ms, &col, &col, shift);
    }
    ms
}

/// Condition 2. The witness is the smallest failing shift.
pub fn aop_condition2(a: &ExponentArray) -> Verdict<usize> {
    let data = columns(a);
    let test = ZeroTest::new(a.order());
    let witness = (1..a.rows()).into_par_iter().find_first(|&kappa| {
        let mut ms = RootMultiset::zero(a.order());
        for col in &data {
            accumulate_cross(&mut ms, col, col, kappa);
        }
        !test.is_zero(&ms)
    });
    Verdict::from_witness(witness)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AopReport {
    pub divisor: usize,
    pub condition1: Verdict<(usize, usize, usize)>,
    pub condition2: Verdict<usize>,
    /// Exact perfectness of the unfolded sequence.
    pub perfect: Verdict<usize>,
}

impl AopReport {
    pub fn overall(&self) -> bool {
        self.condition1.holds() && self.condition2.holds()
    }

    /// False only if the AOP holds for a sequence that is not perfect.
    pub fn implication_holds(&self) -> bool {
        !self.overall() || self.perfect.holds()
    }
}

pub fn aop_verdict(s: &ExponentSequence, d: usize) -> Result<AopReport, AopError> {
    aop_verdict_with(s, d, &ExactLimits::default())
}

pub fn aop_verdict_with(s: &ExponentSequence, d: usize, limits: &ExactLimits) -> Result<AopReport, AopError> {
    let a = fold(s, d)?;
    let perfect = is_perfect_exact_with(s, limits)?;
    Ok(AopReport { divisor: d, condition1: aop_condition1(&a)?, condition2: aop_condition2(&a), perfect })
}
