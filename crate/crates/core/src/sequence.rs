//! Sequences and arrays over roots of unity, stored losslessly as exponents.

use num_complex::Complex;
use thiserror::Error;

use crate::exact::{RootOrder, RootTable};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence must have at least one element")]
    Empty,
    #[error("exponent {value} at index {index} is outside [0, {order})")]
    ExponentOutOfRange { index: usize, value: u64, order: u64 },
    #[error("array of {rows}x{cols} needs {expected} exponents, got {got}")]
    Shape { rows: usize, cols: usize, expected: usize, got: usize },
}

/// `s_i = ω^{exps[i]}` with every exponent in `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentSequence {
    order: RootOrder,
    exps: Vec<u64>,
}

impl ExponentSequence {
    pub fn new(order: RootOrder, exps: Vec<u64>) -> Result<Self, SequenceError> {
        if exps.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some((index, &value)) = exps.iter().enumerate().find(|(_, &e)| e >= order.get()) {
            return Err(SequenceError::ExponentOutOfRange { index, value, order: order.get() });
        }
        Ok(ExponentSequence { order, exps })
    }

    /// Reduces every exponent into `[0, N)` instead of rejecting.
    pub fn from_raw(order: RootOrder, exps: impl IntoIterator<Item = i64>) -> Result<Self, SequenceError> {
        Self::new(order, exps.into_iter().map(|e| order.reduce(e)).collect())
    }

    pub(crate) fn from_canonical(order: RootOrder, exps: Vec<u64>) -> Self {
        debug_assert!(!exps.is_empty() && exps.iter().all(|&e| e < order.get()));
        ExponentSequence { order, exps }
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_complex<F: Real>(&self) -> Vec<Complex<F>> {
        let table = RootTable::<F>::new(self.order);
        self.exps.iter().map(|&e| table.get(e)).collect()
    }
}

/// Row-major `rows × cols` array of exponents in `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentArray {
    order: RootOrder,
    rows: usize,
    cols: usize,
    exps: Vec<u64>,
}

impl ExponentArray {
    pub fn new(order: RootOrder, rows: usize, cols: usize, exps: Vec<u64>) -> Result<Self, SequenceError> {
        let expected = rows * cols;
        if expected == 0 {
            return Err(SequenceError::Empty);
        }
        if exps.len() != expected {
            return Err(SequenceError::Shape { rows, cols, expected, got: exps.len() });
        }
        if let Some((index, &value)) = exps.iter().enumerate().find(|(_, &e)| e >= order.get()) {
            return Err(SequenceError::ExponentOutOfRange { index, value, order: order.get() });
        }
        Ok(ExponentArray { order, rows, cols, exps })
    }

    pub(crate) fn from_canonical(order: RootOrder, rows: usize, cols: usize, exps: Vec<u64>) -> Self {
        debug_assert_eq!(exps.len(), rows * cols);
        ExponentArray { order, rows, cols, exps }
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.exps[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.exps[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    /// Row-by-row enumeration.
    pub fn to_sequence(&self) -> ExponentSequence {
        ExponentSequence::from_canonical(self.order, self.exps.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let n4 = RootOrder::new(4).unwrap();
        assert_eq!(ExponentSequence::new(n4, vec![]), Err(SequenceError::Empty));
        assert_eq!(
            ExponentSequence::new(n4, vec![0, 4]),
            Err(SequenceError::ExponentOutOfRange { index: 1, value: 4, order: 4 })
        );
        let s = ExponentSequence::from_raw(n4, [-1, 5, 8]).unwrap();
        assert_eq!(s.exps(), &[3, 1, 0]);
        assert!(matches!(ExponentArray::new(n4, 2, 2, vec![0; 3]), Err(SequenceError::Shape { .. })));
    }

    #[test]
    fn array_accessors() {
        let a = ExponentArray::new(RootOrder::new(4).unwrap(), 2, 3, vec![0, 1, 2, 3, 0, 1]).unwrap();
        assert_eq!(a.get(1, 0), 3);
        assert_eq!(a.row(1), &[3, 0, 1]);
        assert_eq!(a.column(2), vec![2, 1]);
        assert_eq!(a.to_sequence().exps(), a.exps());
    }
}
