//! JSON report for a single classification run.

use serde::Serialize;

use fracsq_core::classify::{Classification, Verdict};
use fracsq_core::digits::DigitSet;

/// Everything a classification run decided, in a stable field order. The
/// three component counts appear under the names used throughout the crate
/// docs: `m` for the digit graph, `M` for the level-1 graph, `M_prime` for
/// the level-2 graph; counts the pipeline never needed are `null`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub base: i64,
    pub dim: usize,
    pub digit_count: usize,
    pub verdict: &'static str,
    /// Exact component count when the verdict asserts one (`connected`,
    /// `finite`), otherwise `null`.
    pub component_count: Option<usize>,
    /// Proven lower bound on the component count for `inconclusive`
    /// verdicts, otherwise `null`.
    pub lower_bound: Option<usize>,
    pub m: usize,
    #[serde(rename = "M")]
    pub big_m: Option<usize>,
    #[serde(rename = "M_prime")]
    pub m_prime: Option<usize>,
    pub diagnostics: DiagnosticsReport,
    pub timings_ms: Timings,
}

#[derive(Debug, Serialize)]
pub struct DiagnosticsReport {
    pub vertical_like: Option<bool>,
    pub horizontal_like: Option<bool>,
    pub disconnected_without_span: bool,
    pub min_pillar_len: Option<i64>,
    pub full_height_columns: Option<bool>,
    pub leftmost_meets_shift_up: Option<bool>,
    pub rightmost_meets_shift_up: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub classify: u64,
}

impl Report {
    pub fn new(d: &DigitSet, c: &Classification, classify_ms: u64) -> Report {
        let diag = &c.diagnostics;
        Report {
            base: d.base(),
            dim: d.dim(),
            digit_count: d.len(),
            verdict: c.verdict.name(),
            component_count: c.verdict.component_count(),
            lower_bound: match c.verdict {
                Verdict::Inconclusive { lower_bound } => Some(lower_bound),
                _ => None,
            },
            m: c.digit_component_count,
            big_m: c.level1_component_count,
            m_prime: c.level2_component_count,
            diagnostics: DiagnosticsReport {
                vertical_like: diag.vertical_like,
                horizontal_like: diag.horizontal_like,
                disconnected_without_span: diag.disconnected_without_span,
                min_pillar_len: diag.min_pillar_len,
                full_height_columns: diag.full_height_columns,
                leftmost_meets_shift_up: diag.leftmost_meets_shift_up,
                rightmost_meets_shift_up: diag.rightmost_meets_shift_up,
            },
            timings_ms: Timings {
                classify: classify_ms,
            },
        }
    }
}
