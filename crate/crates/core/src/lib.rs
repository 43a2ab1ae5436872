//! Exact connectedness classification for fractal squares and cubes.
//!
//! A base `N ≥ 2` and a digit set `D ⊆ {0, …, N-1}^d` (`d ∈ {2, 3}`)
//! define the self-similar attractor `F = (F + D) / N` inside the unit
//! square or cube. This crate decides, exactly and without floating-point
//! arithmetic, how many connected components `F` has:
//!
//! * **connected** — a single component;
//! * **finite(k)** — exactly `k` components;
//! * **uncountable** — uncountably many components;
//! * **inconclusive** — three-dimensional sets outside the proven planar
//!   dichotomy, reported with an exact lower bound.
//!
//! The decision procedure is purely combinatorial. An *offset automaton*
//! ([`automaton::OffsetAutomaton`]) decides which small integer offsets `v`
//! satisfy `F ∩ (F + v) ≠ ∅`, by computing the greatest fixed point of a
//! digit-transition relation. On top of it, component graphs over digits
//! and cell families ([`graphs`]) produce the non-decreasing count chain
//! `m ≤ M ≤ M'` that the classifier ([`classify`]) turns into a verdict.
//! An independent brute-force oracle on explicit cell grids ([`grid`])
//! never feeds the pipeline and exists purely to contradict it when one of
//! the two is wrong.
//!
//! ```
//! use fracsq_core::{classify::classify, fixtures::builtin};
//!
//! let carpet = builtin("carpet").unwrap();
//! assert_eq!(classify(&carpet).unwrap().verdict.name(), "connected");
//!
//! let pillars = builtin("two_pillars").unwrap();
//! assert_eq!(classify(&pillars).unwrap().verdict.name(), "uncountable");
//! ```

pub mod automaton;
pub mod classify;
pub mod digits;
mod dsf;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod grid;
pub mod pattern;
pub mod rng;

pub use classify::{classify, classify_with_limit, Classification, Diagnostics, Verdict};
pub use digits::{DigitSet, Point, DEFAULT_CELL_LIMIT};
pub use error::{Error, Result};
