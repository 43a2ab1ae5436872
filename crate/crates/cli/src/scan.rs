//! Sweeps over whole families of digit sets, with independent invariant
//! checks on every classification.
//!
//! A planar base-`N` family has one candidate digit per grid cell, so a
//! bitmask below `2^(N²)` names each nonempty set. Sweeps run the full
//! pipeline on every set (exhaustively for small masks, sampled above
//! that), recompute brute-force iterate components, and record every
//! violated invariant instead of trusting either side. A clean sweep means
//! both engines agreed everywhere.

use std::collections::BTreeSet;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use fracsq_core::classify::{classify_with_limit, Classification, Verdict};
use fracsq_core::digits::{DigitSet, Point};
use fracsq_core::error::{Error, Result};
use fracsq_core::grid::{component_trace, ComponentTrace};
use fracsq_core::rng::SplitMix64;

/// Largest mask space swept exhaustively without `--sample` (base 4 planar
/// or base 2 cubes).
const EXHAUSTIVE_MASKS: u64 = 1 << 16;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub base: i64,
    pub dim: usize,
    /// Depth of the brute-force component trace cross-check.
    pub depth: u32,
    /// Sample this many distinct sets instead of sweeping exhaustively.
    pub sample: Option<u64>,
    pub seed: u64,
    pub cell_limit: u64,
}

/// One classified set: the verdict, the count chain, the brute-force trace,
/// and every invariant it violated (an empty list is the expected outcome).
#[derive(Debug, Serialize)]
pub struct ScanRecord {
    pub mask: u64,
    pub digit_count: usize,
    pub verdict: &'static str,
    pub component_count: Option<usize>,
    pub m: usize,
    #[serde(rename = "M")]
    pub big_m: Option<usize>,
    #[serde(rename = "M_prime")]
    pub m_prime: Option<usize>,
    pub trace: Vec<usize>,
    pub trace_truncated_at: Option<u32>,
    pub violations: Vec<String>,
}

/// Trailing JSONL line: totals per verdict and the violation count.
#[derive(Debug, Serialize)]
pub struct ScanSummary {
    pub summary: bool,
    pub base: i64,
    pub dim: usize,
    pub depth: u32,
    pub total: usize,
    pub connected: usize,
    pub finite: usize,
    pub uncountable: usize,
    pub inconclusive: usize,
    pub violations: usize,
}

/// The digit set named by a bitmask: bit `i` switches on the cell
/// `(i mod N, (i div N) mod N, i div N²)`.
pub fn mask_set(base: i64, dim: usize, mask: u64) -> Result<DigitSet> {
    let side = base as usize;
    let mut digits: Vec<Point> = Vec::new();
    // Cells beyond the 64 mask bits can never be switched on.
    for i in 0..side.pow(dim as u32).min(64) {
        if mask >> i & 1 == 1 {
            digits.push([
                (i % side) as i64,
                (i / side % side) as i64,
                (i / (side * side)) as i64,
            ]);
        }
    }
    DigitSet::new(base, dim, digits)
}

fn mask_bits(base: i64, dim: usize) -> Result<u32> {
    let bits = (base as u128).pow(dim as u32);
    if bits > 63 {
        return Err(Error::unsupported(
            "scan",
            format!("base {base} dim {dim} needs {bits}-bit masks; at most 63 cells are sweepable"),
        ));
    }
    Ok(bits as u32)
}

/// Run a sweep. Records come back in ascending mask order regardless of
/// parallel scheduling, so identical configurations produce identical
/// output.
pub fn scan(cfg: &ScanConfig) -> Result<(Vec<ScanRecord>, ScanSummary)> {
    let bits = mask_bits(cfg.base, cfg.dim)?;
    let space: u64 = (1u64 << bits) - 1;
    let masks: Vec<u64> = match cfg.sample {
        Some(k) if k < space => {
            let mut rng = SplitMix64::new(cfg.seed);
            let mut picked = BTreeSet::new();
            while (picked.len() as u64) < k {
                picked.insert(rng.next_below(space) + 1);
            }
            picked.into_iter().collect()
        }
        _ => {
            if space > EXHAUSTIVE_MASKS && cfg.sample.is_none() {
                return Err(Error::unsupported(
                    "scan",
                    format!(
                        "exhaustive sweep over {space} sets refused; pass --sample to subsample"
                    ),
                ));
            }
            (1..=space).collect()
        }
    };
    let records: Vec<ScanRecord> = masks
        .par_iter()
        .map(|&mask| scan_one(cfg, mask))
        .collect::<Result<_>>()?;
    let mut summary = ScanSummary {
        summary: true,
        base: cfg.base,
        dim: cfg.dim,
        depth: cfg.depth,
        total: records.len(),
        connected: 0,
        finite: 0,
        uncountable: 0,
        inconclusive: 0,
        violations: 0,
    };
    for r in &records {
        match r.verdict {
            "connected" => summary.connected += 1,
            "finite" => summary.finite += 1,
            "uncountable" => summary.uncountable += 1,
            _ => summary.inconclusive += 1,
        }
        summary.violations += r.violations.len();
    }
    Ok((records, summary))
}

fn scan_one(cfg: &ScanConfig, mask: u64) -> Result<ScanRecord> {
    let d = mask_set(cfg.base, cfg.dim, mask)?;
    let c = classify_with_limit(&d, cfg.cell_limit)?;
    let trace = component_trace(&d, cfg.depth, cfg.cell_limit)?;
    let violations = check_invariants(&d, &c, &trace);
    Ok(ScanRecord {
        mask,
        digit_count: d.len(),
        verdict: c.verdict.name(),
        component_count: c.verdict.component_count(),
        m: c.digit_component_count,
        big_m: c.level1_component_count,
        m_prime: c.level2_component_count,
        trace: trace.counts,
        trace_truncated_at: trace.truncated_at,
        violations,
    })
}

/// Every cross-check a single classification must satisfy. The checks mix
/// pipeline-internal facts (the count chain is monotone) with relations to
/// the independent grid oracle (iterate components never exceed a finite
/// verdict) and structural theorems (a disconnected set with no spanning
/// direction has uncountably many components).
pub fn check_invariants(
    d: &DigitSet,
    c: &Classification,
    trace: &ComponentTrace,
) -> Vec<String> {
    let mut violations = Vec::new();
    let m = c.digit_component_count;

    if let Some(big_m) = c.level1_component_count {
        if m > big_m {
            violations.push(format!("count chain broken: m={m} > M={big_m}"));
        }
        if let Some(m_prime) = c.level2_component_count {
            if big_m > m_prime {
                violations.push(format!("count chain broken: M={big_m} > M'={m_prime}"));
            }
        }
    }

    match c.verdict {
        Verdict::Connected => {
            if m != 1 {
                violations.push(format!("connected verdict with m={m}"));
            }
            if let Some(&n) = trace.counts.iter().find(|&&n| n != 1) {
                violations.push(format!("connected verdict but an iterate has {n} components"));
            }
        }
        Verdict::Finite(k) => {
            if k < 2 || c.level1_component_count != Some(k) {
                violations.push(format!("finite({k}) verdict inconsistent with count chain"));
            }
            if let Some(&n) = trace.counts.iter().find(|&&n| n > k) {
                violations.push(format!(
                    "finite({k}) verdict but an iterate has {n} components"
                ));
            }
        }
        Verdict::Uncountable => {
            let grew = c
                .level1_component_count
                .zip(c.level2_component_count)
                .is_some_and(|(big_m, m_prime)| m_prime > big_m);
            if !grew {
                violations.push("uncountable verdict without level-2 growth".into());
            }
        }
        Verdict::Inconclusive { lower_bound } => {
            if d.dim() != 3 {
                violations.push("inconclusive verdict for a planar set".into());
            }
            if lower_bound <= 1 || Some(lower_bound) != c.level1_component_count {
                violations.push(format!("inconclusive lower bound {lower_bound} unsupported"));
            }
        }
    }

    let diag = &c.diagnostics;
    if diag.disconnected_without_span && c.verdict != Verdict::Uncountable {
        violations.push(
            "disconnected with no spanning direction must be uncountable".into(),
        );
    }
    if diag.full_height_columns == Some(true) && m >= 2 && c.verdict != Verdict::Uncountable {
        violations.push("disconnected full-height columns must be uncountable".into());
    }
    if matches!(c.verdict, Verdict::Finite(_))
        && diag.vertical_like == Some(true)
        && (diag.leftmost_meets_shift_up != Some(true)
            || diag.rightmost_meets_shift_up != Some(true))
    {
        violations.push(
            "finite vertical-like verdict but a boundary piece misses its vertical translate"
                .into(),
        );
    }
    violations
}

/// Stream records as JSON lines, flushing after each so an interrupted
/// sweep leaves a usable prefix, with the summary as the final line.
pub fn write_jsonl(
    records: &[ScanRecord],
    summary: &ScanSummary,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
        out.flush()?;
    }
    serde_json::to_writer(&mut *out, summary)?;
    out.write_all(b"\n")?;
    out.flush()
}
