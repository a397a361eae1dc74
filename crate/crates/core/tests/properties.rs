mod common;

use num_integer::gcd;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use perfseq::correlation::{autocorrelation_profile_exact, power_spectrum};
use perfseq::exact::cyclotomic_in;
use perfseq::{
    aop_verdict, autocorrelation_fft, blake_tirkel_array, blake_tirkel_sequence, cyclotomic, fold,
    is_perfect_exact, multiset_add, root_value, Complex64, ConstructionParams, ExponentSequence,
    RootMultiset, RootOrder,
};

fn ord(n: u64) -> RootOrder {
    RootOrder::new(n).unwrap()
}

fn orbit(n: u64, q: i64) -> RootMultiset {
    RootMultiset::from_exponents(ord(n), (0..n as i64).map(|k| q * k))
}

#[test]
fn totient_matches_cyclotomic_degree() {
    for n in 1..=400u64 {
        let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
        assert_eq!(cyclotomic(n).unwrap().degree(), Some(phi), "N={n}");
    }
}

#[test]
fn cyclotomic_vanishes_at_primitive_roots() {
    for n in 1..=400u64 {
        let p = cyclotomic(n).unwrap();
        let z: Complex64 = root_value(1, ord(n));
        let bound = 1e-9 * p.abs_coeff_sum();
        assert!(p.evaluate(z).norm() < bound, "N={n}");
    }
}

#[test]
fn cyclotomic_twelve_matches_numeric_expansion() {
    // Π (x - ζ) over primitive 12th roots, expanded in floating point and rounded
    let roots: Vec<Complex64> = (1..12)
        .filter(|&k| gcd(k, 12) == 1)
        .map(|k| root_value(k, ord(12)))
        .collect();
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for z in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * z;
        }
        coeffs = next;
    }
    let rounded: Vec<i64> = coeffs.iter().map(|c| c.re.round() as i64).collect();
    assert_eq!(rounded, vec![1, 0, -1, 0, 1]);
    assert_eq!(cyclotomic(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
}

/// Random multiset that is exactly zero: rotated full orbits of subgroups
/// `{ω^{c + jN/p}}` for primes `p | N`, with random integer weights.
fn vanishing(rng: &mut ChaCha8Rng, n: u64, pieces: usize) -> RootMultiset {
    let primes: Vec<u64> = (2..=n).filter(|&p| n % p == 0 && (2..p).all(|d| p % d != 0)).collect();
    let mut ms = RootMultiset::zero(ord(n));
    if primes.is_empty() {
        return ms;
    }
    for _ in 0..pieces {
        let p = primes[rng.gen_range(0..primes.len())];
        let step = (n / p) as i64;
        let start: i64 = rng.gen_range(0..n as i64);
        let w: i64 = rng.gen_range(-20..=20);
        for j in 0..p as i64 {
            ms.add_term(start + j * step, w);
        }
    }
    ms
}

proptest! {
    #[test]
    fn gaussian_sum_law(n in 1u64..=64, q in -200i64..200) {
        prop_assert_eq!(orbit(n, q).is_zero_sum(), q.rem_euclid(n as i64) != 0);
    }

    #[test]
    fn symbolic_and_numeric_agree(seed in any::<u64>(), n in 2u64..=48, pieces in 1usize..12, perturb in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ms = vanishing(&mut rng, n, pieces);
        if perturb {
            let e: i64 = rng.gen_range(0..n as i64);
            let w: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            ms.add_term(e, w * rng.gen_range(1..5));
        }
        prop_assume!(ms.abs_total() <= 10_000);
        let value = ms.evaluate::<f64>().norm();
        if ms.is_zero_sum() {
            prop_assert!(value <= 1e-9, "zero sum evaluates to {value}");
        } else {
            prop_assert!(value > 1e-9, "nonzero sum evaluates to {value}");
        }
    }

    #[test]
    fn random_counts_cross_validate(n in 1u64..=30, counts in proptest::collection::vec(-300i64..300, 30)) {
        let ms = RootMultiset::from_counts(ord(n), counts[..n as usize].to_vec()).unwrap();
        let value = ms.evaluate::<f64>().norm();
        prop_assert_eq!(ms.is_zero_sum(), value <= 1e-9, "value {}", value);
    }

    #[test]
    fn add_is_commutative_and_associative(
        n in 1u64..=16,
        a in proptest::collection::vec(-50i64..50, 16),
        b in proptest::collection::vec(-50i64..50, 16),
        c in proptest::collection::vec(-50i64..50, 16),
    ) {
        let mk = |v: &Vec<i64>| RootMultiset::from_counts(ord(n), v[..n as usize].to_vec()).unwrap();
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(multiset_add(&a, &b).unwrap(), multiset_add(&b, &a).unwrap());
        let left = multiset_add(&multiset_add(&a, &b).unwrap(), &c).unwrap();
        let right = multiset_add(&a, &multiset_add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wide_and_big_cyclotomics_agree(n in 1u64..=600) {
        let wide = cyclotomic_in::<i128>(n).unwrap();
        let big = cyclotomic_in::<num_bigint::BigInt>(n).unwrap();
        prop_assert_eq!(big, wide.try_convert().unwrap());
    }

    #[test]
    fn construction_shape_and_interleave(n in 1u64..=5, m in 1u64..=3, k in 1u64..=2) {
        let p = ConstructionParams::new(n, m, k).unwrap();
        let s = blake_tirkel_sequence(&p);
        let a = blake_tirkel_array(&p);
        prop_assert_eq!(s.len() as u64, 4 * m * n.pow(k as u32 + 1));
        prop_assert_eq!(s.order().get(), 2 * m * n.pow(k as u32));
        for i in 0..a.rows() {
            for j in 0..2 {
                prop_assert_eq!(s.exps()[2 * i + j], a.get(i, j));
                prop_assert_eq!(a.get(i, j), common::construction_entry(i as u64, j as u64, n, p.order().get()));
            }
        }
        prop_assert_eq!(fold(&s, 2).unwrap(), a);
    }

    #[test]
    fn conjugate_symmetry_and_peak(order in 1u64..=12, exps in proptest::collection::vec(0u64..12, 1..40)) {
        let s = ExponentSequence::from_raw(ord(order), exps.iter().map(|&e| e as i64)).unwrap();
        let len = s.len();
        let profile = autocorrelation_profile_exact::<f64>(&s).unwrap();
        let fft = autocorrelation_fft::<f64>(&s);
        let peak = profile.peak();
        prop_assert_eq!(peak.multiset.counts()[0], len as i64);
        prop_assert_eq!(peak.multiset.total(), len as i64);
        prop_assert!((fft[0].re - len as f64).abs() <= 1e-9 * len as f64);
        for tau in 1..len {
            let fwd = &profile.shifts()[tau].multiset;
            let back = &profile.shifts()[len - tau].multiset;
            prop_assert_eq!(&fwd.conjugate(), back);
            prop_assert!((fft[len - tau] - fft[tau].conj()).norm() <= 1e-9 * len as f64);
        }
        for (tau, v) in fft.iter().enumerate() {
            let want = common::brute_auto(s.exps(), order, tau);
            prop_assert!((v - want).norm() <= 1e-9 * len as f64);
        }
    }

    #[test]
    fn parseval_holds(order in 1u64..=16, exps in proptest::collection::vec(0u64..16, 1..200)) {
        let s = ExponentSequence::from_raw(ord(order), exps.iter().map(|&e| e as i64)).unwrap();
        let len = s.len() as f64;
        let energy: f64 = autocorrelation_fft::<f64>(&s).iter().map(|v| v.norm_sqr()).sum();
        let spectral: f64 = power_spectrum::<f64>(&s).iter().map(|p| p * p).sum::<f64>() / len;
        prop_assert!((energy - spectral).abs() <= 1e-9 * energy.max(1.0));
    }
}

#[test]
fn perfect_sequences_have_flat_spectrum() {
    let mut seqs: Vec<ExponentSequence> =
        common::acceptance_grid().iter().map(blake_tirkel_sequence).collect();
    seqs.extend((1..=8).map(|n| perfseq::frank(n).unwrap()));
    seqs.extend((1..=16).map(|n| perfseq::chu(n).unwrap()));
    for s in seqs {
        assert!(is_perfect_exact(&s).unwrap().holds());
        let len = s.len() as f64;
        for p in power_spectrum::<f64>(&s) {
            assert!((p - len).abs() <= 1e-6 * len);
        }
    }
}

#[test]
fn aop_implies_perfect() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for p in common::acceptance_grid() {
        let r = aop_verdict(&blake_tirkel_sequence(&p), 2).unwrap();
        assert!(r.overall() && r.implication_holds());
        checked += 1;
    }
    let mut random = 0;
    while random < 100 {
        let order = rng.gen_range(2..=12u64);
        let len = 2 * rng.gen_range(1..=24usize);
        let exps: Vec<u64> = (0..len).map(|_| rng.gen_range(0..order)).collect();
        let s = ExponentSequence::new(ord(order), exps).unwrap();
        if is_perfect_exact(&s).unwrap().holds() {
            continue;
        }
        let r = aop_verdict(&s, 2).unwrap();
        assert!(r.implication_holds(), "{s:?}");
        assert!(!r.overall());
        random += 1;
        checked += 1;
    }
    assert!(checked >= 124);
}
