//! The classification pipeline.
//!
//! Component counts of the attractor are decided by a short chain of finite
//! computations: the digit graph (`m` components), the level-1 graph (`M`),
//! and — only when those disagree — the level-2 graph (`M'`). The counts
//! are non-decreasing, and the dichotomy for planar sets is sharp: the
//! count sequence either stabilizes at a finite value visible by level 2,
//! or the attractor has uncountably many components. For cubes the
//! automaton and graphs are still exact, but the dichotomy is not
//! established, so a disagreeing chain yields an inconclusive verdict with
//! the best proven lower bound instead of a guess.

use crate::automaton::{CellSet, OffsetAutomaton};
use crate::digits::{arrange_left_to_right, pillars, shape_flags, DigitSet, DEFAULT_CELL_LIMIT};
use crate::error::{Error, Result};
use crate::graphs::{digit_components, dstar, level1_graph, level2_graph, ComponentDecomposition};

/// Exact connectedness classification of the attractor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// A single connected component.
    Connected,
    /// Exactly this many components, each a nontrivial continuum.
    Finite(usize),
    /// Uncountably many components.
    Uncountable,
    /// Three-dimensional set whose component counts kept growing through
    /// level 2; the planar dichotomy is not available, so only the lower
    /// bound is asserted.
    Inconclusive { lower_bound: usize },
}

impl Verdict {
    /// Stable lowercase tag for reports.
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Connected => "connected",
            Verdict::Finite(_) => "finite",
            Verdict::Uncountable => "uncountable",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    /// The exact component count, when the verdict asserts one.
    pub fn component_count(&self) -> Option<usize> {
        match self {
            Verdict::Connected => Some(1),
            Verdict::Finite(k) => Some(*k),
            _ => None,
        }
    }
}

/// Structural observations that accompany a verdict. Purely informational:
/// the verdict is decided by the graph chain alone, and these flags let
/// callers (and the search tooling) cross-check it against independent
/// necessary or sufficient conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Every digit component joins the bottom row to the top row
    /// (planar sets only).
    pub vertical_like: Option<bool>,
    /// Every digit component joins the left column to the right column.
    pub horizontal_like: Option<bool>,
    /// Disconnected with some component failing each direction — a
    /// sufficient condition for uncountably many components.
    pub disconnected_without_span: bool,
    /// Length of the shortest maximal vertical run of digits.
    pub min_pillar_len: Option<i64>,
    /// Every column that meets the digit set is a full column, so the
    /// attractor is a product `C × [0,1]`; disconnected products have
    /// uncountably many components.
    pub full_height_columns: Option<bool>,
    /// The leftmost digit component's attractor piece meets its own
    /// translate one unit up — necessary for a finite disconnected
    /// vertical-like attractor.
    pub leftmost_meets_shift_up: Option<bool>,
    /// Same for the rightmost component.
    pub rightmost_meets_shift_up: Option<bool>,
}

/// Full result of the pipeline: the verdict, the component counts of each
/// graph the pipeline had to build, and the diagnostic flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Components of the digit graph (`m`).
    pub digit_component_count: usize,
    /// Components of the level-1 graph (`M`), when it was needed.
    pub level1_component_count: Option<usize>,
    /// Components of the level-2 graph (`M'`), when it was needed.
    pub level2_component_count: Option<usize>,
    pub diagnostics: Diagnostics,
}

/// Classify with the default cell budget.
pub fn classify(d: &DigitSet) -> Result<Classification> {
    classify_with_limit(d, DEFAULT_CELL_LIMIT)
}

/// Classify, refusing any step that would materialize more than
/// `cell_limit` cells (only the refined digit set `D*` ever does).
pub fn classify_with_limit(d: &DigitSet, cell_limit: u64) -> Result<Classification> {
    let automaton = OffsetAutomaton::build(d);
    let parts = digit_components(d.digits(), d.dim(), &automaton);
    let m = parts.count();
    let diagnostics = diagnostics(d, &automaton, &parts)?;

    if m == 1 {
        return Ok(Classification {
            verdict: Verdict::Connected,
            digit_component_count: 1,
            level1_component_count: None,
            level2_component_count: None,
            diagnostics,
        });
    }

    let g1 = level1_graph(d, &parts, &automaton);
    let big_m = g1.component_count();
    if big_m < m {
        return Err(Error::Internal(format!(
            "level-1 graph has {big_m} components, fewer than the {m} digit \
             components it refines"
        )));
    }
    if big_m == m {
        return Ok(Classification {
            verdict: Verdict::Finite(m),
            digit_component_count: m,
            level1_component_count: Some(big_m),
            level2_component_count: None,
            diagnostics,
        });
    }
    if d.dim() == 3 {
        return Ok(Classification {
            verdict: Verdict::Inconclusive { lower_bound: big_m },
            digit_component_count: m,
            level1_component_count: Some(big_m),
            level2_component_count: None,
            diagnostics,
        });
    }

    let refined = dstar(d, &parts, &g1, cell_limit)?;
    let g2 = level2_graph(d, &refined, &automaton);
    let m_prime = g2.component_count();
    if m_prime < big_m {
        return Err(Error::Internal(format!(
            "level-2 graph has {m_prime} components, fewer than the level-1 \
             graph's {big_m}"
        )));
    }
    let verdict = if m_prime == big_m {
        Verdict::Finite(big_m)
    } else {
        Verdict::Uncountable
    };
    Ok(Classification {
        verdict,
        digit_component_count: m,
        level1_component_count: Some(big_m),
        level2_component_count: Some(m_prime),
        diagnostics,
    })
}

fn diagnostics(
    d: &DigitSet,
    automaton: &OffsetAutomaton,
    parts: &ComponentDecomposition,
) -> Result<Diagnostics> {
    if d.dim() != 2 {
        return Ok(Diagnostics::default());
    }
    let m = parts.count();
    let flags = shape_flags(d, parts)?;
    let min_pillar = pillars(d)?.iter().map(|p| p.len()).min();
    let mut out = Diagnostics {
        vertical_like: Some(flags.vertical_like),
        horizontal_like: Some(flags.horizontal_like),
        disconnected_without_span: m >= 2 && !flags.vertical_like && !flags.horizontal_like,
        min_pillar_len: min_pillar,
        full_height_columns: min_pillar.map(|l| l == d.base()),
        leftmost_meets_shift_up: None,
        rightmost_meets_shift_up: None,
    };
    if m >= 2 && flags.vertical_like {
        let order = arrange_left_to_right(d, parts)?;
        let meets = |part: u32| -> Result<bool> {
            let cells: Vec<_> = d
                .digits()
                .iter()
                .zip(parts.labels())
                .filter_map(|(&p, &l)| (l == part).then_some(p))
                .collect();
            let piece = CellSet::new(1, d.base(), cells);
            let above = piece.translate([0, d.base(), 0]);
            automaton.cells_intersect(&piece, &above)
        };
        out.leftmost_meets_shift_up = Some(meets(order[0])?);
        out.rightmost_meets_shift_up = Some(meets(order[order.len() - 1])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin;

    fn classify_builtin(name: &str) -> Classification {
        classify(&builtin(name).unwrap()).unwrap()
    }

    #[test]
    fn connected_square_stops_at_the_digit_graph() {
        let c = classify_builtin("carpet");
        assert_eq!(c.verdict, Verdict::Connected);
        assert_eq!(c.digit_component_count, 1);
        assert_eq!(c.level1_component_count, None);
        assert_eq!(c.level2_component_count, None);
        assert_eq!(c.verdict.component_count(), Some(1));
        assert_eq!(c.diagnostics.vertical_like, Some(true));
        assert_eq!(c.diagnostics.horizontal_like, Some(true));
        assert_eq!(c.diagnostics.min_pillar_len, Some(1));
    }

    #[test]
    fn diagonal_corner_contact_is_connected() {
        let c = classify_builtin("diag_pair");
        assert_eq!(c.verdict, Verdict::Connected);
    }

    #[test]
    fn growing_graph_chain_is_uncountable() {
        let c = classify_builtin("two_pillars");
        assert_eq!(c.verdict, Verdict::Uncountable);
        assert_eq!(c.digit_component_count, 2);
        assert_eq!(c.level1_component_count, Some(4));
        assert_eq!(c.level2_component_count, Some(8));
        assert_eq!(c.verdict.component_count(), None);

        let d = c.diagnostics;
        assert_eq!(d.vertical_like, Some(true));
        assert_eq!(d.horizontal_like, Some(false));
        assert!(!d.disconnected_without_span);
        assert_eq!(d.min_pillar_len, Some(3));
        assert_eq!(d.full_height_columns, Some(true));
        // Both boundary pieces meet their vertical translate; the condition
        // is necessary for finiteness, not sufficient.
        assert_eq!(d.leftmost_meets_shift_up, Some(true));
        assert_eq!(d.rightmost_meets_shift_up, Some(true));
    }

    #[test]
    fn stable_graph_chain_is_finite() {
        let c = classify_builtin("example21_like");
        assert_eq!(c.verdict, Verdict::Finite(2));
        assert_eq!(c.digit_component_count, 2);
        assert_eq!(c.level1_component_count, Some(2));
        // The level-1 graph already agreed, so level 2 was never built.
        assert_eq!(c.level2_component_count, None);

        let d = c.diagnostics;
        assert_eq!(d.vertical_like, Some(true));
        assert_eq!(d.min_pillar_len, Some(2));
        assert_eq!(d.full_height_columns, Some(false));
        assert_eq!(d.leftmost_meets_shift_up, Some(true));
        assert_eq!(d.rightmost_meets_shift_up, Some(true));
    }

    #[test]
    fn generator_hits_requested_component_count() {
        let c = classify_builtin("exact_m(5)");
        assert_eq!(c.verdict, Verdict::Finite(5));
        assert_eq!(c.digit_component_count, 5);
        assert_eq!(c.level1_component_count, Some(5));
    }

    #[test]
    fn connected_cube_gets_a_full_verdict() {
        let c = classify_builtin("diag3d");
        assert_eq!(c.verdict, Verdict::Connected);
        // Planar diagnostics stay empty for cubes.
        assert_eq!(c.diagnostics, Diagnostics::default());
    }

    #[test]
    fn disconnected_cube_is_inconclusive_with_a_bound() {
        // Two cubes touching only at a dead corner offset: the digit graph
        // has 2 components and the level-1 graph 4 — for a cube that growth
        // proves nothing more than the bound.
        let d = DigitSet::new(3, 3, vec![[0, 0, 0], [1, 1, 0]]).unwrap();
        let c = classify(&d).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive { lower_bound: 4 });
        assert_eq!(c.digit_component_count, 2);
        assert_eq!(c.level1_component_count, Some(4));
        assert_eq!(c.level2_component_count, None);
        assert_eq!(c.verdict.name(), "inconclusive");
    }

    #[test]
    fn isolated_corners_have_no_span_direction() {
        // Digits (0,0) and (2,2) over base 4: two dust pieces, neither
        // vertical- nor horizontal-like, so the sufficient condition for
        // uncountability fires and the pipeline must agree.
        let d = DigitSet::new(4, 2, vec![[0, 0, 0], [2, 2, 0]]).unwrap();
        let c = classify(&d).unwrap();
        assert!(c.diagnostics.disconnected_without_span);
        assert_eq!(c.verdict, Verdict::Uncountable);
    }

    #[test]
    fn budget_applies_only_when_refinement_is_needed() {
        // The stable example never builds the refined set, so a tiny budget
        // is fine there but refuses the pillar case.
        let stable = builtin("example21_like").unwrap();
        assert!(classify_with_limit(&stable, 10).is_ok());
        let pillars = builtin("two_pillars").unwrap();
        assert!(matches!(
            classify_with_limit(&pillars, 10),
            Err(Error::Budget { .. })
        ));
    }
}
