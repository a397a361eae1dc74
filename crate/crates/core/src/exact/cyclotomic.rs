//! Cyclotomic polynomials with exact integer coefficients.
//!
//! The main route uses `Φ_N(x) = Φ_{rad N}(x^{N / rad N})` and, for squarefree
//! `N > 1`, `Φ_N(x) = Π_{d | N} (1 - x^d)^{μ(N/d)}` evaluated as a power series
//! truncated at degree `φ(N)`. Every step is a multiplication by, or exact
//! division by, a binomial `1 - x^d`, which costs `O(φ(N))`.
//!
//! [`cyclotomic_by_recurrence`] computes the same polynomial from
//! `Φ_N(x) = (x^N - 1) / Π_{d | N, d < N} Φ_d(x)` with general long division.
//! It is quadratic in the degree and kept as an independent route.

use std::collections::BTreeMap;

use super::arith::{divisors, mobius, prime_factors};
use super::{ExactError, IntPolynomial, Polynomial, MAX_ORDER};
use crate::scalar::Coefficient;

fn check_order(n: u64) -> Result<usize, ExactError> {
    if n == 0 {
        return Err(ExactError::InvalidOrder(n));
    }
    if n > MAX_ORDER {
        return Err(ExactError::OrderTooLarge { order: n, bound: MAX_ORDER });
    }
    Ok(n as usize)
}

/// `Φ_N` with 64-bit coefficients. Overflow is reported, never wrapped.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial, ExactError> {
    cyclotomic_in::<i64>(n)
}

/// `Φ_N` over an arbitrary exact coefficient ring.
pub fn cyclotomic_in<C: Coefficient>(n: u64) -> Result<Polynomial<C>, ExactError> {
    let n = check_order(n)?;
    if n == 1 {
        return Ok(Polynomial::from_i64s(&[-1, 1]));
    }
    let primes = prime_factors(n as u64);
    let rad: u64 = primes.iter().product();
    let squarefree = squarefree_series::<C>(rad)?;
    Ok(squarefree.compose_power(n / rad as usize))
}

fn squarefree_series<C: Coefficient>(rad: u64) -> Result<Polynomial<C>, ExactError> {
    let deg = super::arith::totient(rad) as usize;
    let mut a = vec![C::zero(); deg + 1];
    a[0] = C::one();
    let divs = divisors(rad);
    // multiplications first keep the intermediate a genuine polynomial product
    for &d in divs.iter().filter(|&&d| mobius(rad / d) == 1) {
        let d = d as usize;
        for i in (d..=deg).rev() {
            a[i] = a[i].checked_sub(&a[i - d]).ok_or(ExactError::CoefficientOverflow)?;
        }
    }
    for &d in divs.iter().filter(|&&d| mobius(rad / d) == -1) {
        let d = d as usize;
        for i in d..=deg {
            a[i] = a[i].checked_add(&a[i - d]).ok_or(ExactError::CoefficientOverflow)?;
        }
    }
    Ok(Polynomial::new(a))
}

/// `Φ_N` by repeated exact division of `x^N - 1` by the lower cyclotomic factors.
pub fn cyclotomic_by_recurrence<C: Coefficient>(n: u64) -> Result<Polynomial<C>, ExactError> {
    let n = check_order(n)? as u64;
    let mut memo: BTreeMap<u64, Polynomial<C>> = BTreeMap::new();
    for d in divisors(n) {
        let mut p = Polynomial::<C>::x_pow_minus_one(d as usize);
        for (_, lower) in memo.iter().filter(|(&e, _)| d % e == 0) {
            p = p.exact_div(lower)?;
        }
        memo.insert(d, p);
    }
    Ok(memo.remove(&n).expect("n divides itself"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_orders() {
        assert_eq!(cyclotomic(1).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic(2).unwrap().coeffs(), &[1, 1]);
        assert_eq!(cyclotomic(4).unwrap().coeffs(), &[1, 0, 1]);
        assert_eq!(cyclotomic(6).unwrap().coeffs(), &[1, -1, 1]);
        assert_eq!(cyclotomic(8).unwrap().coeffs(), &[1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic(9).unwrap().coeffs(), &[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
    }

    #[test]
    fn order_105_has_a_coefficient_of_minus_two() {
        let p = cyclotomic(105).unwrap();
        assert_eq!(p.degree(), Some(48));
        assert_eq!(p.coeffs()[7], -2);
        assert_eq!(p.coeffs()[41], -2);
        assert!(p.coeffs().iter().all(|c| c.abs() <= 2));
    }

    #[test]
    fn routes_agree() {
        for n in 1..=240u64 {
            let fast = cyclotomic_in::<i128>(n).unwrap();
            let slow = cyclotomic_by_recurrence::<i128>(n).unwrap();
            assert_eq!(fast, slow, "N={n}");
        }
    }

    #[test]
    fn bigint_matches_fixed_width() {
        for n in [30u64, 105, 210, 385] {
            let big = cyclotomic_in::<BigInt>(n).unwrap();
            let small: Polynomial<BigInt> = cyclotomic(n).unwrap().try_convert().unwrap();
            assert_eq!(big, small);
        }
    }

    #[test]
    fn order_bounds() {
        assert_eq!(cyclotomic(0), Err(ExactError::InvalidOrder(0)));
        assert!(matches!(cyclotomic(MAX_ORDER + 1), Err(ExactError::OrderTooLarge { .. })));
        // the bound itself is reachable: 10^6 reduces to Φ_10(x^100000)
        let p = cyclotomic(MAX_ORDER).unwrap();
        assert_eq!(p.degree(), Some(400_000));
    }

    #[test]
    fn narrowing_conversion_reports_overflow() {
        let wide: Polynomial<i128> = Polynomial::from_i64s(&[1, i64::MAX]);
        let bumped = wide.checked_mul(&Polynomial::from_i64s(&[2])).unwrap();
        assert_eq!(bumped.try_convert::<i64>(), Err(ExactError::CoefficientOverflow));
    }
}
