//! Independent oracles shared by the integration tests. Nothing here goes
//! through the crate's exact path; correlations are summed directly in f64.
#![allow(dead_code)]

use std::f64::consts::TAU;

use perfseq::{Complex64, ConstructionParams};

pub fn unit(e: i64, n: u64) -> Complex64 {
    let r = e.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, TAU * r / n as f64)
}

/// `Σ_i ω^{a_i - b_{i+τ}}`, summed term by term.
pub fn brute_cross(a: &[u64], b: &[u64], n: u64, tau: usize) -> Complex64 {
    let len = a.len();
    (0..len)
        .map(|i| unit(a[i] as i64 - b[(i + tau) % len] as i64, n))
        .sum()
}

pub fn brute_auto(s: &[u64], n: u64, tau: usize) -> Complex64 {
    brute_cross(s, s, n, tau)
}

/// Smallest off-peak shift with `|θ(τ)| > tol`, or `None`.
pub fn brute_witness(s: &[u64], n: u64, tol: f64) -> Option<usize> {
    (1..s.len()).find(|&t| brute_auto(s, n, t).norm() > tol)
}

/// `⌊i(i+j)/n⌋ mod N`, recomputed from scratch.
pub fn construction_entry(i: u64, j: u64, n: u64, order: u64) -> u64 {
    (i as u128 * (i + j) as u128 / n as u128 % order as u128) as u64
}

/// `(n, m, k) ∈ {1..4}×{1..3}×{1,2}` with `4mn^{k+1} <= 5000`.
pub fn acceptance_grid() -> Vec<ConstructionParams> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for m in 1..=3 {
            for k in 1..=2 {
                let p = ConstructionParams::new(n, m, k).unwrap();
                if p.length() <= 5000 {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// `Σ_{x ∈ terms} ω^x` as a plain complex sum.
pub fn sum_roots(terms: impl IntoIterator<Item = i64>, n: u64) -> Complex64 {
    terms.into_iter().map(|e| unit(e, n)).sum()
}
