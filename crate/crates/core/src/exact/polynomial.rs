//! Dense univariate polynomials over an exact integer coefficient ring.

use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};

use super::ExactError;
use crate::scalar::{Coefficient, Real};

/// Polynomial with coefficients in ascending degree order.
///
/// Trailing zeros are stripped on construction, so the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![C::one()] }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[0] = -C::one();
        coeffs[n] = coeffs[n].clone() + C::one();
        Polynomial::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| C::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Substitute `x -> x^e`.
    pub fn compose_power(&self, e: usize) -> Self {
        if self.is_zero() || e == 1 {
            return self.clone();
        }
        assert!(e > 0, "compose_power: exponent must be positive");
        let deg = self.coeffs.len() - 1;
        let mut out = vec![C::zero(); deg * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * e] = c.clone();
        }
        Polynomial::new(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(ExactError::CoefficientOverflow)?;
                out[i + j] = out[i + j]
                    .checked_add(&term)
                    .ok_or(ExactError::CoefficientOverflow)?;
            }
        }
        Ok(Polynomial::new(out))
    }

    /// Classical long division. The divisor's leading coefficient must be a
    /// unit (±1) so that every quotient coefficient stays in the integers.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let (quotient, rem) = self.long_division(divisor, true)?;
        Ok((Polynomial::new(quotient), rem))
    }

    /// Remainder only; skips materializing the quotient.
    pub fn rem(&self, divisor: &Self) -> Result<Self, ExactError> {
        Ok(self.long_division(divisor, false)?.1)
    }

    /// Exact quotient; fails if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ExactError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(ExactError::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, dividend: &Self) -> Result<bool, ExactError> {
        Ok(dividend.rem(self)?.is_zero())
    }

    fn long_division(&self, divisor: &Self, keep_quotient: bool) -> Result<(Vec<C>, Self), ExactError> {
        let lead = divisor.leading().ok_or(ExactError::DivisionByZero)?;
        let lead_is_one = lead.is_one();
        if !lead_is_one && *lead != -C::one() {
            return Err(ExactError::NonUnitDivisor);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Vec::new(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let steps = rem.len() - dd;
        let mut quotient = if keep_quotient { vec![C::zero(); steps] } else { Vec::new() };
        for shift in (0..steps).rev() {
            let top = rem[shift + dd].clone();
            if top.is_zero() {
                continue;
            }
            // lead is its own inverse
            let q = if lead_is_one { top } else { -top };
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let term = q.checked_mul(d).ok_or(ExactError::CoefficientOverflow)?;
                rem[shift + i] = rem[shift + i]
                    .checked_sub(&term)
                    .ok_or(ExactError::CoefficientOverflow)?;
            }
            rem[shift + dd] = C::zero();
            if keep_quotient {
                quotient[shift] = q;
            }
        }
        rem.truncate(dd);
        Ok((quotient, Polynomial::new(rem)))
    }

    /// Coefficientwise conversion into another ring; fails on narrowing overflow.
    pub fn try_convert<D>(&self) -> Result<Polynomial<D>, ExactError>
    where
        C: ToPrimitive,
        D: Coefficient + TryFrom<i128>,
    {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_i128()
                    .and_then(|v| D::try_from(v).ok())
                    .ok_or(ExactError::CoefficientOverflow)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Polynomial::new)
    }

    /// Horner evaluation at a complex point.
    pub fn evaluate<F: Real>(&self, z: Complex<F>) -> Complex<F>
    where
        C: ToPrimitive,
    {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, c| {
            acc * z + Complex::new(F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap(), F::zero())
        })
    }

    /// Sum of absolute coefficient values, as f64.
    pub fn abs_coeff_sum(&self) -> f64
    where
        C: ToPrimitive,
    {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY).abs()).sum()
    }
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient + PartialOrd + std::fmt::Display> std::fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < C::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<C: Coefficient> std::ops::Mul for Polynomial<C> {
    type Output = Self;

    /// Panics on coefficient overflow; use [`Polynomial::checked_mul`] to handle it.
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("polynomial coefficient overflow")
    }
}
