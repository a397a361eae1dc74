//! Sequence families with perfect periodic autocorrelation.
//!
//! The main construction takes `n, m, k >= 1` and an order `N = 2mn^k` root
//! of unity `ω`, builds the `2mn^{k+1} × 2` array `S[i][j] = ω^{⌊i(i+j)/n⌋}`
//! and reads it out row by row into a sequence of length `4mn^{k+1}`.
//!
//! Frank, Chu and Milewski sequences are provided as baselines.

use num_rational::Ratio;
use thiserror::Error;

use crate::exact::{ExactError, RootOrder};
use crate::sequence::{ExponentArray, ExponentSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameter {name} must be at least 1, got {value}")]
    InvalidParameter { name: &'static str, value: u64 },
    #[error("construction size overflows: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Order(#[from] ExactError),
}

/// Validated `(n, m, k)` with the derived order, row count and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    n: u64,
    m: u64,
    k: u32,
    order: RootOrder,
    rows: usize,
}

impl ConstructionParams {
    pub fn new(n: u64, m: u64, k: u64) -> Result<Self, ConstructionError> {
        for (name, value) in [("n", n), ("m", m), ("k", k)] {
            if value < 1 {
                return Err(ConstructionError::InvalidParameter { name, value });
            }
        }
        let too_large = || ConstructionError::TooLarge(format!("n={n}, m={m}, k={k}"));
        let k32 = u32::try_from(k).map_err(|_| too_large())?;
        let order = n
            .checked_pow(k32)
            .zip(m.checked_mul(2))
            .and_then(|(p, two_m)| p.checked_mul(two_m))
            .ok_or_else(too_large)?;
        let order = RootOrder::new(order)?;
        let rows = order.get().checked_mul(n).ok_or_else(too_large)?;
        // i(i+j) < 2R² is formed in u128
        let length = rows.checked_mul(2).ok_or_else(too_large)?;
        let rows = usize::try_from(rows).map_err(|_| too_large())?;
        usize::try_from(length).map_err(|_| too_large())?;
        Ok(ConstructionParams { n, m, k: k32, order, rows })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k as u64
    }

    /// `N = 2mn^k`.
    pub fn order(&self) -> RootOrder {
        self.order
    }

    /// `R = 2mn^{k+1}`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `L = 4mn^{k+1}`.
    pub fn length(&self) -> usize {
        2 * self.rows
    }

    /// The perfectness argument needs `n >= 2`; `n = 1` still produces
    /// sequences that check out numerically and exactly, but only empirically.
    pub fn within_proof_scope(&self) -> bool {
        self.n >= 2
    }
}

/// Alias for [`ConstructionParams::new`].
pub fn validate_params(n: u64, m: u64, k: u64) -> Result<ConstructionParams, ConstructionError> {
    ConstructionParams::new(n, m, k)
}

/// The `R × 2` array with entries `⌊i(i+j)/n⌋ mod N`.
pub fn blake_tirkel_array(p: &ConstructionParams) -> ExponentArray {
    let n = p.n as u128;
    let order = p.order.get() as u128;
    let mut exps = Vec::with_capacity(p.length());
    for i in 0..p.rows as u128 {
        for j in 0..2u128 {
            exps.push(((i * (i + j) / n) % order) as u64);
        }
    }
    ExponentArray::from_canonical(p.order, p.rows, 2, exps)
}

/// Row-by-row enumeration of [`blake_tirkel_array`]: `s[2i + j] = S[i][j]`.
pub fn blake_tirkel_sequence(p: &ConstructionParams) -> ExponentSequence {
    blake_tirkel_array(p).to_sequence()
}

fn order_of(n: u64) -> Result<RootOrder, ConstructionError> {
    Ok(RootOrder::new(n)?)
}

fn positive(name: &'static str, value: u64) -> Result<(), ConstructionError> {
    if value < 1 {
        return Err(ConstructionError::InvalidParameter { name, value });
    }
    Ok(())
}

/// Frank sequence: length `n²` over `n` phases, `s[qn + r] = qr mod n`.
pub fn frank(n: u64) -> Result<ExponentSequence, ConstructionError> {
    positive("n", n)?;
    let order = order_of(n)?;
    n.checked_mul(n)
        .and_then(|l| usize::try_from(l).ok())
        .ok_or_else(|| ConstructionError::TooLarge(format!("frank n={n}")))?;
    let exps = (0..n).flat_map(|q| (0..n).map(move |r| (q * r) % n)).collect();
    Ok(ExponentSequence::from_canonical(order, exps))
}

/// Chu sequence of length `n`: `i(i+1)/2 mod n` for odd `n`,
/// `i² mod 2n` over `2n` phases for even `n`.
pub fn chu(n: u64) -> Result<ExponentSequence, ConstructionError> {
    positive("n", n)?;
    let exps: Vec<u64> = if n % 2 == 1 {
        let nn = n as u128;
        (0..nn).map(|i| ((i * (i + 1) / 2) % nn) as u64).collect()
    } else {
        let two_n = 2 * n as u128;
        (0..n as u128).map(|i| ((i * i) % two_n) as u64).collect()
    };
    let order = order_of(if n % 2 == 1 { n } else { 2 * n })?;
    Ok(ExponentSequence::from_canonical(order, exps))
}

/// Milewski sequence of length `m^{2k+1}` built on a [`chu`] seed of length `m`.
///
/// The order is `m^{k+1}`, doubled when `m` is even because the seed then
/// needs `2m` phases. With `M = m^{k+1}` and `i ∈ [0, M)`, `j ∈ [0, m^k)`:
/// `s[i·m^k + j] = seed(i mod m)·(order / seed order) + i·j·(order / M) mod order`.
pub fn milewski(m: u64, k: u64) -> Result<ExponentSequence, ConstructionError> {
    positive("m", m)?;
    positive("k", k)?;
    let too_large = || ConstructionError::TooLarge(format!("milewski m={m}, k={k}"));
    let k32 = u32::try_from(k).map_err(|_| too_large())?;
    let inner = m.checked_pow(k32).ok_or_else(too_large)?; // m^k
    let outer = inner.checked_mul(m).ok_or_else(too_large)?; // m^{k+1}
    let length = outer.checked_mul(inner).ok_or_else(too_large)?;
    usize::try_from(length).map_err(|_| too_large())?;
    let seed = chu(m)?;
    let seed_order = seed.order().get();
    let order_value = if m % 2 == 0 { outer.checked_mul(2).ok_or_else(too_large)? } else { outer };
    let order = order_of(order_value)?;
    let seed_scale = (order_value / seed_order) as u128;
    let phase_scale = (order_value / outer) as u128;
    let on = order_value as u128;
    let mut exps = Vec::with_capacity(length as usize);
    for i in 0..outer as u128 {
        let base = seed.exps()[(i % m as u128) as usize] as u128 * seed_scale;
        for j in 0..inner as u128 {
            exps.push(((base + i * j * phase_scale) % on) as u64);
        }
    }
    Ok(ExponentSequence::from_canonical(order, exps))
}

/// Sequence length divided by the number of phases, exactly.
pub fn phase_efficiency(s: &ExponentSequence) -> Ratio<u64> {
    Ratio::new(s.len() as u64, s.order().get())
}

/// A named family member, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    BlakeTirkel(ConstructionParams),
    Frank { n: u64 },
    Chu { n: u64 },
    Milewski { m: u64, k: u64 },
}

impl Construction {
    pub const NAMES: [&'static str; 4] = ["blake-tirkel", "frank", "chu", "milewski"];

    pub fn name(&self) -> &'static str {
        match self {
            Construction::BlakeTirkel(_) => "blake-tirkel",
            Construction::Frank { .. } => "frank",
            Construction::Chu { .. } => "chu",
            Construction::Milewski { .. } => "milewski",
        }
    }

    /// Parameter names and values in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            Construction::BlakeTirkel(p) => vec![("k", p.k()), ("m", p.m()), ("n", p.n())],
            Construction::Frank { n } | Construction::Chu { n } => vec![("n", n)],
            Construction::Milewski { m, k } => vec![("k", k), ("m", m)],
        }
    }

    /// Sequence length, computed without building the sequence.
    pub fn length(&self) -> Option<u64> {
        match *self {
            Construction::BlakeTirkel(p) => Some(p.length() as u64),
            Construction::Frank { n } => n.checked_mul(n),
            Construction::Chu { n } => Some(n),
            Construction::Milewski { m, k } => {
                u32::try_from(2 * k + 1).ok().and_then(|e| m.checked_pow(e))
            }
        }
    }

    pub fn sequence(&self) -> Result<ExponentSequence, ConstructionError> {
        match *self {
            Construction::BlakeTirkel(p) => Ok(blake_tirkel_sequence(&p)),
            Construction::Frank { n } => frank(n),
            Construction::Chu { n } => chu(n),
            Construction::Milewski { m, k } => milewski(m, k),
        }
    }

    /// The folding divisor whose array has the orthogonality property, if the
    /// family comes with one.
    pub fn natural_divisor(&self) -> Option<usize> {
        match *self {
            Construction::BlakeTirkel(_) => Some(2),
            Construction::Frank { n } if n >= 2 => Some(n as usize),
            _ => None,
        }
    }
}
