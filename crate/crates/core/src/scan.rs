//! Parameter-grid driver: builds every construction in a grid and runs the
//! exact perfectness, AOP and array checks on each.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::aop::{aop_condition1, aop_condition2, fold};
use crate::correlation::{is_perfect_array_with, is_perfect_exact_with, ExactLimits};
use crate::generators::{blake_tirkel_array, phase_efficiency, Construction, ConstructionParams};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_max: u64,
    pub m_max: u64,
    pub k_max: u64,
    /// Rows whose sequence is longer than this are skipped.
    pub max_length: u64,
    /// Also scan `frank(n)` and `chu(n)` for `n` in `1..=n_max`.
    pub baselines: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { n_max: 4, m_max: 3, k_max: 2, max_length: 5000, baselines: true }
    }
}

/// `None` means the check does not apply to the row's family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub construction: Construction,
    pub length: usize,
    pub order: u64,
    pub efficiency: Ratio<u64>,
    pub perfect: Verdict<usize>,
    pub aop: Option<bool>,
    pub array: Option<Verdict<(usize, usize)>>,
    /// `Some(false)` for `n = 1` rows, which sit outside the perfectness proof.
    pub proof_scope: Option<bool>,
    pub elapsed: Duration,
}

impl ScanRow {
    pub fn passes(&self) -> bool {
        self.perfect.holds()
            && self.aop.unwrap_or(true)
            && self.array.as_ref().is_none_or(Verdict::holds)
    }
}

/// Grid members in deterministic order: the main family by `(n, m, k)`, then
/// Frank and Chu by `n`.
pub fn grid(config: &ScanConfig) -> Vec<Construction> {
    let mut out = Vec::new();
    for n in 1..=config.n_max {
        for m in 1..=config.m_max {
            for k in 1..=config.k_max {
                if let Ok(p) = ConstructionParams::new(n, m, k) {
                    out.push(Construction::BlakeTirkel(p));
                }
            }
        }
    }
    if config.baselines {
        out.extend((1..=config.n_max).map(|n| Construction::Frank { n }));
        out.extend((1..=config.n_max).map(|n| Construction::Chu { n }));
    }
    out.retain(|c| c.length().is_some_and(|l| l <= config.max_length));
    out
}

pub fn scan_row(construction: Construction) -> ScanRow {
    let start = Instant::now();
    let limits = ExactLimits::unlimited();
    let s = construction.sequence().expect("grid members are valid");
    let perfect = is_perfect_exact_with(&s, &limits).expect("unlimited");
    let aop = construction.natural_divisor().map(|d| {
        let a = fold(&s, d).expect("natural divisor divides the length");
        aop_condition1(&a).expect("at least two columns").holds() && aop_condition2(&a).holds()
    });
    let array = match construction {
        Construction::BlakeTirkel(p) => Some(blake_tirkel_array(&p)),
        Construction::Frank { n } => Some(fold(&s, n as usize).expect("n divides n²")),
        _ => None,
    }
    .map(|a| is_perfect_array_with(&a, &limits).expect("unlimited"));
    let proof_scope = match construction {
        Construction::BlakeTirkel(p) => Some(p.within_proof_scope()),
        _ => None,
    };
    ScanRow {
        construction,
        length: s.len(),
        order: s.order().get(),
        efficiency: phase_efficiency(&s),
        perfect,
        aop,
        array,
        proof_scope,
        elapsed: start.elapsed(),
    }
}

/// Evaluates the grid in parallel; rows come back in [`grid`] order.
pub fn scan(config: &ScanConfig) -> Vec<ScanRow> {
    grid(config).into_par_iter().map(scan_row).collect()
}
