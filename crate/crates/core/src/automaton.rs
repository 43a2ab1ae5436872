//! Exact intersection oracle for integer translates of the attractor.
//!
//! For a digit set `D` over base `N` with attractor `F = (F + D)/N`, this
//! module decides, for any integer offset `v` with `‖v‖_∞ ≤ 1`, whether
//! `F ∩ (F + v) ≠ ∅`. That single predicate drives everything else: two
//! same-level cells `a`, `b` carry intersecting copies of `F` exactly when
//! `‖b - a‖_∞ ≤ 1` and `F ∩ (F + (b - a)) ≠ ∅`.
//!
//! The decision procedure is a finite automaton on the `3^dim` offset
//! states `v ∈ {-1, 0, 1}^dim`. If some point `x` lies in `F ∩ (F + v)`,
//! expanding `x` and `x - v` one digit each shows that `F ∩ (F + w) ≠ ∅`
//! for some successor `w = N·v + e - d` with `d, e ∈ D`; conversely an
//! infinite transition path starting at `v` assembles digit expansions of a
//! concrete witness point. Hence `F ∩ (F + v) ≠ ∅` holds exactly for the
//! states that survive in the *greatest fixed point*: repeatedly discard
//! states with no outgoing transition until the set stabilizes.
//!
//! The oracle depends only on the attractor, not on its presentation: a
//! rescaled digit set (same `F` over base `N^k`) builds an automaton with
//! the same alive set.

use std::collections::{HashMap, HashSet};

use crate::digits::{add, chebyshev, scale, sub, unit_offsets, DigitSet, Point};
use crate::error::{Error, Result};

/// A finite set of same-level cells, each standing for a copy of `F`
/// scaled by `base^-level` and anchored at an integer lattice point.
/// Translated cell sets may legitimately leave `[0, base^level - 1]^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    pub level: u32,
    pub base: i64,
    pub cells: Vec<Point>,
}

impl CellSet {
    pub fn new(level: u32, base: i64, cells: Vec<Point>) -> CellSet {
        CellSet { level, base, cells }
    }

    /// Translate every cell by `offset`.
    pub fn translate(&self, offset: Point) -> CellSet {
        CellSet {
            level: self.level,
            base: self.base,
            cells: self.cells.iter().map(|&c| add(c, offset)).collect(),
        }
    }
}

/// The intersection oracle: which unit offsets `v` satisfy
/// `F ∩ (F + v) ≠ ∅`.
#[derive(Debug, Clone)]
pub struct OffsetAutomaton {
    base: i64,
    dim: usize,
    alive: Vec<bool>,
    alive_offsets: Vec<Point>,
}

/// Dense index of a state in `{-1,0,1}^dim`, or `None` when out of range.
fn encode(v: Point, dim: usize) -> Option<usize> {
    let mut idx = 0usize;
    let mut stride = 1usize;
    for &c in v.iter().take(dim) {
        if !(-1..=1).contains(&c) {
            return None;
        }
        idx += (c + 1) as usize * stride;
        stride *= 3;
    }
    // Coordinates beyond the dimension must be zero for a valid offset.
    if v.iter().skip(dim).any(|&c| c != 0) {
        return None;
    }
    Some(idx)
}

impl OffsetAutomaton {
    /// Build the oracle for a digit set by computing the greatest fixed
    /// point of the offset transition system.
    pub fn build(d: &DigitSet) -> OffsetAutomaton {
        let n = d.base();
        let dim = d.dim();
        let states = unit_offsets(dim);
        let count = states.len();

        // Transition v -> w exists iff w = N·v + (e - d) for digits d, e,
        // i.e. iff the difference delta = w - N·v is realized by some digit
        // pair. Only O(9^dim) distinct deltas matter; memoize each probe.
        let mut delta_known: HashMap<Point, bool> = HashMap::new();
        let mut has_delta = |delta: Point| -> bool {
            *delta_known.entry(delta).or_insert_with(|| {
                d.digits().iter().any(|&p| d.contains(add(p, delta)))
            })
        };
        let mut succ: Vec<Vec<u16>> = vec![Vec::new(); count];
        for (si, &v) in states.iter().enumerate() {
            let nv = scale(v, n);
            for (ti, &w) in states.iter().enumerate() {
                if has_delta(sub(w, nv)) {
                    succ[si].push(ti as u16);
                }
            }
        }

        // Greatest fixed point: discard states with no alive successor
        // until stable. The surviving states are exactly the offsets whose
        // translate meets F.
        let mut alive = vec![true; count];
        loop {
            let mut changed = false;
            for si in 0..count {
                if alive[si] && !succ[si].iter().any(|&t| alive[t as usize]) {
                    alive[si] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let alive_offsets: Vec<Point> = states
            .iter()
            .copied()
            .filter(|&v| alive[encode(v, dim).unwrap()])
            .collect();

        let a = OffsetAutomaton {
            base: n,
            dim,
            alive,
            alive_offsets,
        };
        // Structural invariants: the zero offset always survives (take
        // d = e forever), and the alive set is symmetric under negation
        // (swap the roles of the two copies of F).
        debug_assert!(a.nonempty([0, 0, 0]));
        debug_assert!(a
            .alive_offsets
            .iter()
            .all(|&v| a.nonempty(scale(v, -1))));
        a
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Does `F ∩ (F + v) ≠ ∅`? Offsets outside `{-1,0,1}^dim` (including a
    /// nonzero third coordinate for 2-D sets) are correctly reported as
    /// empty: `F` lives in the unit cube, so such translates cannot meet it.
    pub fn nonempty(&self, v: Point) -> bool {
        match encode(v, self.dim) {
            Some(idx) => self.alive[idx],
            None => false,
        }
    }

    /// Offsets with `F ∩ (F + v) ≠ ∅`, canonically ordered.
    pub fn alive_offsets(&self) -> &[Point] {
        &self.alive_offsets
    }

    /// Do two same-level cell sets carry intersecting pieces of the
    /// attractor? Cost is proportional to `min(|S|, |T|) · |alive|` thanks
    /// to an indexed lookup of the larger side; no quadratic pairing.
    pub fn cells_intersect(&self, s: &CellSet, t: &CellSet) -> Result<bool> {
        if s.level != t.level || s.base != t.base {
            return Err(Error::Mismatch(format!(
                "cell sets disagree on scale: level {} base {} vs level {} base {}",
                s.level, s.base, t.level, t.base
            )));
        }
        let (small, large, flipped) = if s.cells.len() <= t.cells.len() {
            (&s.cells, &t.cells, false)
        } else {
            (&t.cells, &s.cells, true)
        };
        let index: HashSet<Point> = large.iter().copied().collect();
        for &a in small {
            for &w in &self.alive_offsets {
                // Looking for b in the indexed set with b - a = w when the
                // small side is S, or a - b = w when sides are flipped.
                let b = if flipped { sub(a, w) } else { add(a, w) };
                if index.contains(&b) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Convenience wrapper: are the scaled copies of `F` at two single cells
/// intersecting? Exposed for tests and diagnostics.
pub fn cells_adjacent(a: &OffsetAutomaton, x: Point, y: Point) -> bool {
    chebyshev(sub(y, x), a.dim()) <= 1 && a.nonempty(sub(y, x))
}
