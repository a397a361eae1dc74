use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use perfseq::correlation::is_numerically_perfect;
use perfseq::exact::MAX_ORDER;
use perfseq::{
    autocorrelation_fft, blake_tirkel_sequence, max_offpeak_magnitude, ConstructionParams, ExponentSequence, RootOrder,
};

use crate::commands::write_table;
use crate::{BenchArgs, CliError, EXIT_OK};

/// Largest length exponent accepted; 2^24 points already need ~0.5 GiB of buffers.
pub const MAX_EXP: u32 = 24;

pub const BENCH_COLUMNS: [&str; 11] = [
    "length",
    "random_order",
    "random_ms",
    "random_max_offpeak",
    "random_perfect",
    "bt_params",
    "bt_length",
    "bt_order",
    "bt_ms",
    "bt_max_offpeak",
    "bt_perfect",
];

/// Main-family parameters (n >= 2) whose length is closest to `target`.
/// Ties go to the larger n, then the smaller m.
pub fn nearest_params(target: u64) -> Option<ConstructionParams> {
    let mut best: Option<(u64, ConstructionParams)> = None;
    let mut consider = |p: ConstructionParams| {
        let gap = (p.length() as u64).abs_diff(target);
        let better = match &best {
            None => true,
            Some((g, b)) => gap < *g || (gap == *g && (p.n(), std::cmp::Reverse(p.m())) > (b.n(), std::cmp::Reverse(b.m()))),
        };
        if better {
            best = Some((gap, p));
        }
    };
    let limit = target.saturating_mul(2).max(16);
    let mut n = 2u64;
    while 4 * n * n <= limit {
        let mut k = 1u32;
        while let Some(base) = n.checked_pow(k + 1).and_then(|v| v.checked_mul(4)) {
            if base > limit {
                break;
            }
            let m = (target / base).max(1);
            for m in [m, m + 1] {
                if let Ok(p) = ConstructionParams::new(n, m, k as u64) {
                    consider(p);
                }
            }
            k += 1;
        }
        n += 1;
    }
    best.map(|(_, p)| p)
}

fn timed_fft(s: &ExponentSequence) -> (f64, f64, bool) {
    let start = Instant::now();
    let values = autocorrelation_fft::<f64>(s);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    (ms, max_offpeak_magnitude(&values), is_numerically_perfect(&values))
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn bench(args: &BenchArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    if args.max_exp > MAX_EXP {
        return Err(CliError::Usage(format!("--max-exp is capped at {MAX_EXP}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut rows = Vec::new();
    for e in args.min_exp..=args.max_exp {
        let len = 1usize << e;
        let order = RootOrder::new((len as u64).min(MAX_ORDER)).expect("order within bounds");
        let exps: Vec<u64> = (0..len).map(|_| rng.gen_range(0..order.get())).collect();
        let random = ExponentSequence::new(order, exps).expect("exponents reduced");
        let (r_ms, r_max, r_ok) = timed_fft(&random);

        let (bt_params, bt_len, bt_order, bt_ms, bt_max, bt_ok) = match nearest_params(len as u64) {
            Some(p) => {
                let s = blake_tirkel_sequence(&p);
                let (ms, max, ok) = timed_fft(&s);
                (
                    format!("n={};m={};k={}", p.n(), p.m(), p.k()),
                    s.len().to_string(),
                    s.order().to_string(),
                    format!("{ms:.3}"),
                    format!("{max:.3e}"),
                    yes_no(ok),
                )
            }
            None => {
                let dash = || "-".to_string();
                (dash(), dash(), dash(), dash(), dash(), dash())
            }
        };
        rows.push([
            len.to_string(),
            order.to_string(),
            format!("{r_ms:.3}"),
            format!("{r_max:.3e}"),
            yes_no(r_ok),
            bt_params,
            bt_len,
            bt_order,
            bt_ms,
            bt_max,
            bt_ok,
        ]);
    }
    write_table(out, args.format, BENCH_COLUMNS, &rows)?;
    Ok(EXIT_OK)
}
