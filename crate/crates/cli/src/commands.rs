use std::fs;
use std::io::Write;
use std::path::Path;

use perfseq::aop::aop_verdict_with;
use perfseq::correlation::{is_numerically_perfect, is_perfect_exact_with, ExactLimits};
use perfseq::scan::{scan as run_scan, ScanConfig, ScanRow};
use perfseq::{autocorrelation_fft, max_offpeak_magnitude, Construction, ConstructionParams, ExponentSequence, Verdict};

use crate::document::{Format, SequenceDocument};
use crate::{
    AopArgs, CliError, ConstructionArgs, ConstructionName, FormatArg, GenerateArgs, Mode, ScanArgs, TableFormat,
    VerifyArgs, EXIT_FAILED, EXIT_OK,
};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        write_out($out, &format!("{}\n", format_args!($($arg)*)))
    };
}

fn require(value: Option<u64>, flag: &str, name: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| usage(format!("{name} needs -{flag}")))
}

pub fn resolve_construction(args: &ConstructionArgs) -> Result<Construction, CliError> {
    let name = args.name().ok_or_else(|| usage("no construction given"))?;
    let c = match name {
        ConstructionName::BlakeTirkel => {
            let n = require(args.n, "n", "blake-tirkel")?;
            let p = ConstructionParams::new(n, args.m.unwrap_or(1), args.k.unwrap_or(1))
                .map_err(|e| usage(e.to_string()))?;
            Construction::BlakeTirkel(p)
        }
        ConstructionName::Frank => Construction::Frank { n: require(args.n, "n", "frank")? },
        ConstructionName::Chu => Construction::Chu { n: require(args.n, "n", "chu")? },
        ConstructionName::Milewski => {
            Construction::Milewski { m: require(args.m, "m", "milewski")?, k: args.k.unwrap_or(1) }
        }
    };
    // surface parameter errors before any output is written
    c.sequence().map_err(|e| usage(e.to_string()))?;
    Ok(c)
}

struct Loaded {
    label: String,
    sequence: ExponentSequence,
    construction: Option<Construction>,
}

fn load(source: &ConstructionArgs, input: Option<&Path>) -> Result<Loaded, CliError> {
    match (input, source.name()) {
        (Some(_), Some(_)) => Err(usage("give either --input or a construction, not both")),
        (None, None) => Err(usage("give a construction or --input")),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            let doc = SequenceDocument::decode(&text)?;
            let sequence = doc.to_sequence()?;
            let params: Vec<String> = doc.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            Ok(Loaded { label: format!("{} {}", doc.construction, params.join(" ")), sequence, construction: None })
        }
        (None, Some(_)) => {
            let c = resolve_construction(source)?;
            let sequence = c.sequence().map_err(|e| usage(e.to_string()))?;
            let params: Vec<String> = c.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
            Ok(Loaded { label: format!("{} {}", c.name(), params.join(" ")), sequence, construction: Some(c) })
        }
    }
}

pub fn generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let c = resolve_construction(&args.source)?;
    let s = c.sequence().map_err(|e| usage(e.to_string()))?;
    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let text = SequenceDocument::from_construction(&c, &s).encode(format);
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
        None => write_out(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn header(out: &mut dyn Write, loaded: &Loaded) -> Result<(), CliError> {
    outln!(out, "sequence: {}", loaded.label.trim_end())?;
    outln!(out, "length: {}", loaded.sequence.len())?;
    outln!(out, "order: {}", loaded.sequence.order())?;
    if let Some(Construction::BlakeTirkel(p)) = loaded.construction {
        if !p.within_proof_scope() {
            outln!(out, "note: n = 1 is outside the proof's range; results are empirical")?;
        }
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let loaded = load(&args.source, args.input.as_deref())?;
    let s = &loaded.sequence;
    header(out, &loaded)?;
    let limits = ExactLimits { max_length: args.max_length };

    let exact = match args.mode {
        Mode::Exact | Mode::Both => Some(is_perfect_exact_with(s, &limits).map_err(|e| {
            usage(format!("{e}; raise --max-length or use --mode fft"))
        })?),
        Mode::Fft => None,
    };
    if let Some(v) = &exact {
        match v {
            Verdict::Holds => outln!(out, "exact: perfect")?,
            Verdict::Fails { witness } => outln!(out, "exact: not perfect, witness shift {witness}")?,
        }
    }
    let numeric = match args.mode {
        Mode::Fft | Mode::Both => {
            let values = autocorrelation_fft::<f64>(s);
            let max = max_offpeak_magnitude(&values);
            let ok = is_numerically_perfect(&values);
            let witness = (1..values.len())
                .find(|&t| values[t].norm() > perfseq::correlation::NUMERIC_PERFECTION_RELATIVE * s.len() as f64);
            let status = if ok { "numerically perfect".to_string() } else {
                format!("not perfect, witness shift {}", witness.unwrap_or(0))
            };
            outln!(out, "fft: max off-peak {max:.3e} ({status})")?;
            Some(ok)
        }
        Mode::Exact => None,
    };
    // the exact verdict is authoritative whenever it was computed
    let perfect = exact.map(|v| v.holds()).or(numeric).unwrap_or(false);
    outln!(out, "verdict: {}", if perfect { "perfect" } else { "not perfect" })?;
    Ok(if perfect { EXIT_OK } else { EXIT_FAILED })
}

pub fn aop(args: &AopArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let loaded = load(&args.source, args.input.as_deref())?;
    let s = &loaded.sequence;
    let d = args.divisor;
    let limits = ExactLimits { max_length: args.max_length };
    let report = aop_verdict_with(s, d, &limits).map_err(|e| usage(e.to_string()))?;
    header(out, &loaded)?;
    outln!(out, "divisor: {d} ({} rows x {d} columns)", s.len() / d)?;
    match report.condition1 {
        Verdict::Holds => outln!(out, "condition 1 (distinct columns orthogonal at every shift): holds")?,
        Verdict::Fails { witness: (j1, j2, kappa) } => {
            outln!(out, "condition 1: fails for columns {j1},{j2} at shift {kappa}")?
        }
    }
    match report.condition2 {
        Verdict::Holds => outln!(out, "condition 2 (summed column autocorrelation vanishes off-peak): holds")?,
        Verdict::Fails { witness } => outln!(out, "condition 2: fails at shift {witness}")?,
    }
    outln!(out, "aop: {}", if report.overall() { "holds" } else { "does not hold" })?;
    match report.perfect {
        Verdict::Holds => outln!(out, "perfect (exact): yes")?,
        Verdict::Fails { witness } => outln!(out, "perfect (exact): no, witness shift {witness}")?,
    }
    Ok(if report.overall() { EXIT_OK } else { EXIT_FAILED })
}

fn verdict_cell<W>(v: &Verdict<W>) -> &'static str {
    if v.holds() {
        "yes"
    } else {
        "no"
    }
}

fn optional_cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub const SCAN_COLUMNS: [&str; 10] =
    ["construction", "params", "length", "order", "efficiency", "exact", "aop", "array", "scope", "time_ms"];

pub fn scan_cells(row: &ScanRow) -> [String; 10] {
    let params: Vec<String> = row.construction.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    let scope = match row.proof_scope {
        Some(true) => "proof",
        Some(false) => "empirical",
        None => "-",
    };
    [
        row.construction.name().to_string(),
        params.join(";"),
        row.length.to_string(),
        row.order.to_string(),
        row.efficiency.to_string(),
        verdict_cell(&row.perfect).to_string(),
        optional_cell(row.aop).to_string(),
        optional_cell(row.array.as_ref().map(Verdict::holds)).to_string(),
        scope.to_string(),
        format!("{:.3}", row.elapsed.as_secs_f64() * 1e3),
    ]
}

pub(crate) fn write_table<const C: usize>(
    out: &mut dyn Write,
    format: TableFormat,
    columns: [&str; C],
    rows: &[[String; C]],
) -> Result<(), CliError> {
    match format {
        TableFormat::Csv => {
            outln!(out, "{}", columns.join(","))?;
            for row in rows {
                outln!(out, "{}", row.join(","))?;
            }
        }
        TableFormat::Table => {
            let mut widths = columns.map(str::len);
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            outln!(out, "{}", line(columns.to_vec()))?;
            for row in rows {
                outln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
            }
        }
    }
    Ok(())
}

pub fn scan(args: &ScanArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let config = ScanConfig {
        n_max: args.n_max,
        m_max: args.m_max,
        k_max: args.k_max,
        max_length: args.max_length,
        baselines: !args.no_baselines,
    };
    let rows = run_scan(&config);
    let cells: Vec<[String; 10]> = rows.iter().map(scan_cells).collect();
    write_table(out, args.format, SCAN_COLUMNS, &cells)?;
    Ok(if rows.iter().all(ScanRow::passes) { EXIT_OK } else { EXIT_FAILED })
}
