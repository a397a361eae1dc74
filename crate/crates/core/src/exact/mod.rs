//! Exact arithmetic over the `N`-th roots of unity.
//!
//! A sum `Σ_e c_e ω^e` with `ω = e^{2πi/N}` is stored as the count vector
//! `c` (a [`RootMultiset`]). The sum is zero exactly when the cyclotomic
//! polynomial `Φ_N` divides `Σ_e c_e x^e` over the integers, which is how
//! [`RootMultiset::is_zero_sum`] decides it. Floating point evaluation is
//! available but never used to certify a zero.

mod arith;
pub mod cyclotomic;
pub mod polynomial;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

use crate::scalar::Real;
pub use cyclotomic::{cyclotomic, cyclotomic_by_recurrence, cyclotomic_in};
pub use polynomial::Polynomial;

/// Polynomial with 64-bit integer coefficients.
pub type IntPolynomial = Polynomial<i64>;

/// Largest supported root order.
pub const MAX_ORDER: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("root order must be at least 1, got {0}")]
    InvalidOrder(u64),
    #[error("root order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: u64, bound: u64 },
    #[error("root orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("count vector has {got} entries, expected {expected}")]
    CountLength { expected: usize, got: usize },
    #[error("integer coefficient overflow")]
    CoefficientOverflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor leading coefficient is not a unit")]
    NonUnitDivisor,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
}

/// Order `N` of the primitive root `ω = e^{2πi/N}`, with `1 <= N <= MAX_ORDER`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOrder(u64);

impl RootOrder {
    pub fn new(n: u64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::InvalidOrder(n));
        }
        if n > MAX_ORDER {
            return Err(ExactError::OrderTooLarge { order: n, bound: MAX_ORDER });
        }
        Ok(RootOrder(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// Canonical exponent in `[0, N)`; negative exponents use the true modulus.
    pub fn reduce(self, e: i64) -> u64 {
        e.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce_wide(self, e: i128) -> u64 {
        e.rem_euclid(self.0 as i128) as u64
    }
}

impl fmt::Display for RootOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `e^{2πi (e mod N) / N}`.
pub fn root_value<F: Real>(e: i64, order: RootOrder) -> Complex<F> {
    let n = order.get();
    let r = order.reduce(e);
    // points on the axes are returned exactly
    if (r * 4) % n == 0 {
        return match r * 4 / n {
            0 => Complex::new(F::one(), F::zero()),
            1 => Complex::new(F::zero(), F::one()),
            2 => Complex::new(-F::one(), F::zero()),
            _ => Complex::new(F::zero(), -F::one()),
        };
    }
    Complex::from_polar(F::one(), F::TAU() * F::from(r).unwrap() / F::from(n).unwrap())
}

/// Precomputed `ω^e` for every `e` in `[0, N)`.
#[derive(Debug, Clone)]
pub struct RootTable<F> {
    order: RootOrder,
    values: Vec<Complex<F>>,
}

impl<F: Real> RootTable<F> {
    pub fn new(order: RootOrder) -> Self {
        let values = (0..order.get()).map(|e| root_value(e as i64, order)).collect();
        RootTable { order, values }
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn get(&self, e: u64) -> Complex<F> {
        self.values[(e % self.order.get()) as usize]
    }

    pub fn evaluate(&self, ms: &RootMultiset) -> Complex<F> {
        assert_eq!(ms.order, self.order, "root table order mismatch");
        ms.counts
            .iter()
            .zip(&self.values)
            .filter(|(&c, _)| c != 0)
            .fold(Complex::zero(), |acc, (&c, &w)| acc + w * F::from(c).unwrap())
    }
}

/// Integer combination `Σ_e counts[e]·ω^e` of the `N`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootMultiset {
    order: RootOrder,
    counts: Vec<i64>,
}

impl RootMultiset {
    pub fn zero(order: RootOrder) -> Self {
        RootMultiset { order, counts: vec![0; order.as_usize()] }
    }

    pub fn from_counts(order: RootOrder, counts: Vec<i64>) -> Result<Self, ExactError> {
        if counts.len() != order.as_usize() {
            return Err(ExactError::CountLength { expected: order.as_usize(), got: counts.len() });
        }
        Ok(RootMultiset { order, counts })
    }

    /// One unit count per exponent, each reduced mod `N`.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(order: RootOrder, exps: I) -> Self {
        let mut ms = Self::zero(order);
        for e in exps {
            ms.push(e);
        }
        ms
    }

    pub fn push(&mut self, e: i64) {
        self.add_term(e, 1);
    }

    pub fn add_term(&mut self, e: i64, coeff: i64) {
        let idx = self.order.reduce(e) as usize;
        self.counts[idx] += coeff;
    }

    /// Add one count at an exponent already known to lie in `[0, N)`.
    #[inline]
    pub(crate) fn bump(&mut self, e: u64) {
        self.counts[e as usize] += 1;
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// `Σ counts`; for a correlation value this is the number of terms.
    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }

    /// `Σ |counts|`, the height bound used in the numeric error estimate.
    pub fn abs_total(&self) -> u64 {
        self.counts.iter().map(|c| c.unsigned_abs()).sum()
    }

    /// The multiset representing the complex conjugate (every exponent negated).
    pub fn conjugate(&self) -> Self {
        let n = self.counts.len();
        let mut counts = vec![0; n];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(n - e) % n] = c;
        }
        RootMultiset { order: self.order, counts }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch { left: self.order.get(), right: other.order.get() });
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(RootMultiset { order: self.order, counts })
    }

    pub fn is_zero_sum(&self) -> bool {
        ZeroTest::new(self.order).is_zero(self)
    }

    /// Double precision value. The rounding error is at most about
    /// `4 · abs_total() · ε` in magnitude.
    pub fn evaluate<F: Real>(&self) -> Complex<F> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(Complex::zero(), |acc, (e, &c)| {
                acc + root_value::<F>(e as i64, self.order) * F::from(c).unwrap()
            })
    }
}

/// Componentwise sum of two multisets over the same order.
pub fn multiset_add(a: &RootMultiset, b: &RootMultiset) -> Result<RootMultiset, ExactError> {
    a.checked_add(b)
}

/// Exact vanishing test: `Σ counts[e]·ω^e = 0` iff `Φ_N | Σ counts[e]·x^e`.
pub fn is_zero_sum(ms: &RootMultiset) -> bool {
    ms.is_zero_sum()
}

#[derive(Debug, Clone)]
enum Modulus {
    Wide(Polynomial<i128>),
    Big(Polynomial<BigInt>),
}

/// Cached `Φ_N` for repeated zero tests at one root order.
///
/// Arithmetic runs in `i128`; if an intermediate overflows, the same test is
/// redone with arbitrary precision, so the answer is always exact.
#[derive(Debug, Clone)]
pub struct ZeroTest {
    order: RootOrder,
    modulus: Modulus,
}

impl ZeroTest {
    pub fn new(order: RootOrder) -> Self {
        let modulus = match cyclotomic_in::<i128>(order.get()) {
            Ok(p) => Modulus::Wide(p),
            Err(_) => Modulus::Big(
                cyclotomic_in::<BigInt>(order.get()).expect("order is within the supported bound"),
            ),
        };
        ZeroTest { order, modulus }
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn is_zero(&self, ms: &RootMultiset) -> bool {
        if ms.order != self.order {
            return ZeroTest::new(ms.order).is_zero(ms);
        }
        if ms.counts.iter().all(|&c| c == 0) {
            return true;
        }
        match &self.modulus {
            Modulus::Wide(phi) => {
                let c = Polynomial::<i128>::new(ms.counts.iter().map(|&c| c as i128).collect());
                match c.rem(phi) {
                    Ok(r) => r.is_zero(),
                    Err(_) => {
                        let big_phi: Polynomial<BigInt> = phi.try_convert().expect("widening");
                        Self::big_rem_is_zero(ms, &big_phi)
                    }
                }
            }
            Modulus::Big(phi) => Self::big_rem_is_zero(ms, phi),
        }
    }

    fn big_rem_is_zero(ms: &RootMultiset, phi: &Polynomial<BigInt>) -> bool {
        let c = Polynomial::<BigInt>::new(ms.counts.iter().map(|&c| BigInt::from(c)).collect());
        c.rem(phi).expect("cyclotomic polynomials are monic").is_zero()
    }
}
