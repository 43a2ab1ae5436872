//! Digit sets: the combinatorial core of a fractal square or cube.
//!
//! A digit set `D ⊆ {0..N-1}^d` together with a base `N ≥ 2` determines the
//! self-similar set `F = (F + D) / N`, the unique nonempty compact solution
//! of that set equation. All structural questions answered by this crate
//! (connectedness, component counts) are functions of `(N, D)` alone.
//!
//! Coordinates use a bottom-left origin: `x` grows to the right, `y` grows
//! upward, and `z` (three-dimensional sets only) grows toward the viewer.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graphs::ComponentDecomposition;

/// A lattice point. The third coordinate is zero for two-dimensional sets.
pub type Point = [i64; 3];

/// Largest side length `N^k` we allow for any cell grid. Keeps every packed
/// coordinate `(side^3)` comfortably inside `i64`.
pub const MAX_SIDE: i64 = 1 << 20;

/// Default ceiling on the number of cells any operation may materialize.
/// Override per call site (the CLI wires `FRACSQ_CELL_LIMIT` through).
pub const DEFAULT_CELL_LIMIT: u64 = 100_000_000;

/// Canonical ordering of lattice points: row-major with the last coordinate
/// most significant, i.e. `(z, y, x)` lexicographic. Every deterministic
/// artifact (component ids, DOT files, scan records) leans on this order.
pub fn canon_cmp(a: &Point, b: &Point) -> std::cmp::Ordering {
    (a[2], a[1], a[0]).cmp(&(b[2], b[1], b[0]))
}

/// Componentwise sum of two points.
#[inline]
pub fn add(a: Point, b: Point) -> Point {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Componentwise difference `a - b`.
#[inline]
pub fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Scale a point by an integer factor.
#[inline]
pub fn scale(a: Point, k: i64) -> Point {
    [a[0] * k, a[1] * k, a[2] * k]
}

/// Chebyshev norm over the first `dim` coordinates.
#[inline]
pub fn chebyshev(a: Point, dim: usize) -> i64 {
    let mut m = 0;
    for c in a.iter().take(dim) {
        m = m.max(c.abs());
    }
    m
}

/// All `3^dim` offsets with entries in `{-1, 0, 1}` (zero offset included),
/// in canonical order.
pub fn unit_offsets(dim: usize) -> Vec<Point> {
    let mut out = Vec::with_capacity(3usize.pow(dim as u32));
    let zr = if dim == 3 { -1..=1 } else { 0..=0 };
    for z in zr {
        for y in -1..=1 {
            for x in -1..=1 {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// A validated digit set: base, dimension, and a canonically sorted,
/// duplicate-free list of digits inside `[0, N-1]^dim`.
#[derive(Debug, Clone)]
pub struct DigitSet {
    base: i64,
    dim: usize,
    digits: Vec<Point>,
    index: HashMap<Point, u32>,
}

impl PartialEq for DigitSet {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.dim == other.dim && self.digits == other.digits
    }
}
impl Eq for DigitSet {}

impl DigitSet {
    /// Validate and canonicalize a digit set.
    ///
    /// Requirements: `base ≥ 2`, `dim ∈ {2, 3}`, at least one digit, every
    /// coordinate in `[0, base-1]` (third coordinate zero when `dim == 2`),
    /// no duplicates.
    pub fn new(base: i64, dim: usize, mut digits: Vec<Point>) -> Result<DigitSet> {
        if !(2..=MAX_SIDE).contains(&base) {
            return Err(Error::InvalidDigitSet(format!(
                "base must be in [2, {MAX_SIDE}], got {base}"
            )));
        }
        if dim != 2 && dim != 3 {
            return Err(Error::InvalidDigitSet(format!(
                "dimension must be 2 or 3, got {dim}"
            )));
        }
        if digits.is_empty() {
            return Err(Error::InvalidDigitSet("empty digit set".into()));
        }
        for p in &digits {
            for (axis, &c) in p.iter().enumerate().take(dim) {
                if !(0..base).contains(&c) {
                    return Err(Error::InvalidDigitSet(format!(
                        "digit {p:?}: axis {axis} coordinate {c} outside [0, {}]",
                        base - 1
                    )));
                }
            }
            if dim == 2 && p[2] != 0 {
                return Err(Error::InvalidDigitSet(format!(
                    "digit {p:?}: nonzero z coordinate in a 2-dimensional set"
                )));
            }
        }
        digits.sort_by(canon_cmp);
        if digits.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDigitSet("duplicate digit".into()));
        }
        let index = digits
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as u32))
            .collect();
        Ok(DigitSet {
            base,
            dim,
            digits,
            index,
        })
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a validated digit set is never empty
    }

    /// Digits in canonical (row-major) order.
    pub fn digits(&self) -> &[Point] {
        &self.digits
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index.contains_key(&p)
    }

    /// Position of `p` in the canonical digit order.
    pub fn digit_index(&self, p: Point) -> Option<u32> {
        self.index.get(&p).copied()
    }

    /// Base-`N` expansions of depth `n`: the cells of the `n`-th iterate
    /// `Q_n`, i.e. all sums `N^{n-1} d_1 + ... + d_n`. Expansions are unique,
    /// so exactly `|D|^n` cells come back, in digit-major order.
    pub(crate) fn expansion_cells(
        &self,
        n: u32,
        limit: u64,
        module: &'static str,
    ) -> Result<Vec<Point>> {
        if n == 0 {
            return Ok(vec![[0, 0, 0]]);
        }
        let side = checked_power(self.base, n, module)?;
        debug_assert!(side <= MAX_SIDE);
        let required = (self.len() as u128).pow(n);
        if required > limit as u128 {
            return Err(Error::Budget {
                module,
                required,
                limit,
            });
        }
        let mut cells = vec![[0i64, 0, 0]];
        for level in 0..n {
            let step = self.base.pow(level);
            let mut next = Vec::with_capacity(cells.len() * self.len());
            for d in &self.digits {
                let offset = scale(*d, step);
                for c in &cells {
                    next.push(add(offset, *c));
                }
            }
            cells = next;
        }
        Ok(cells)
    }

    /// Rewrite the same attractor over base `N^k`: the digit set
    /// `N^{k-1} D + ... + D` with `|D|^k` digits. The attractor of the
    /// rescaled system is exactly `F`, so every classification result must
    /// be invariant under this operation.
    pub fn rescale(&self, k: u32) -> Result<DigitSet> {
        if k == 0 {
            return Err(Error::unsupported("digits", "rescale exponent must be ≥ 1"));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let new_base = checked_power(self.base, k, "digits")?;
        let digits = self.expansion_cells(k, DEFAULT_CELL_LIMIT, "digits")?;
        DigitSet::new(new_base, self.dim, digits)
    }
}

/// Compute `base^n` with the coordinate-overflow guard.
pub(crate) fn checked_power(base: i64, n: u32, module: &'static str) -> Result<i64> {
    let mut v: i64 = 1;
    for _ in 0..n {
        v = v.checked_mul(base).unwrap_or(i64::MAX);
        if v > MAX_SIDE {
            return Err(Error::Overflow {
                module,
                msg: format!("{base}^{n} exceeds the maximum grid side {MAX_SIDE}"),
            });
        }
    }
    Ok(v)
}

/// A maximal vertical run of digits in one column of a 2-D digit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pillar {
    pub x: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Pillar {
    pub fn len(&self) -> i64 {
        self.y_max - self.y_min + 1
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees y_min <= y_max
    }
}

/// Partition a 2-D digit set into maximal vertical runs (pillars), sorted by
/// `(x, y_min)`. Every digit lies in exactly one pillar.
pub fn pillars(d: &DigitSet) -> Result<Vec<Pillar>> {
    if d.dim() != 2 {
        return Err(Error::unsupported(
            "digits",
            "pillars are defined for 2-dimensional digit sets only",
        ));
    }
    let mut columns: HashMap<i64, Vec<i64>> = HashMap::new();
    for p in d.digits() {
        columns.entry(p[0]).or_default().push(p[1]);
    }
    let mut xs: Vec<i64> = columns.keys().copied().collect();
    xs.sort_unstable();
    let mut out = Vec::new();
    for x in xs {
        let ys = columns.get_mut(&x).unwrap();
        ys.sort_unstable();
        let mut run_start = ys[0];
        let mut prev = ys[0];
        for &y in &ys[1..] {
            if y != prev + 1 {
                out.push(Pillar {
                    x,
                    y_min: run_start,
                    y_max: prev,
                });
                run_start = y;
            }
            prev = y;
        }
        out.push(Pillar {
            x,
            y_min: run_start,
            y_max: prev,
        });
    }
    Ok(out)
}

/// Per-component span flags for a 2-D digit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentShape {
    /// Component has a digit on the bottom row (`y = 0`) and one on the top
    /// row (`y = N-1`), so its part of the attractor joins the bottom and
    /// top edges of the unit square.
    pub vertical: bool,
    /// Same with columns `x = 0` and `x = N-1`.
    pub horizontal: bool,
}

/// Shape summary: per-component flags plus their conjunctions. The attractor
/// is called vertical-like when *every* component joins bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFlags {
    pub per_component: Vec<ComponentShape>,
    pub vertical_like: bool,
    pub horizontal_like: bool,
}

/// Compute span flags for every digit component of a 2-D set.
pub fn shape_flags(d: &DigitSet, parts: &ComponentDecomposition) -> Result<ShapeFlags> {
    if d.dim() != 2 {
        return Err(Error::unsupported(
            "digits",
            "shape flags are defined for 2-dimensional digit sets only",
        ));
    }
    debug_assert_eq!(parts.labels().len(), d.len());
    let top = d.base() - 1;
    let mut bottom_hit = vec![false; parts.count()];
    let mut top_hit = vec![false; parts.count()];
    let mut left_hit = vec![false; parts.count()];
    let mut right_hit = vec![false; parts.count()];
    for (p, &label) in d.digits().iter().zip(parts.labels()) {
        let l = label as usize;
        bottom_hit[l] |= p[1] == 0;
        top_hit[l] |= p[1] == top;
        left_hit[l] |= p[0] == 0;
        right_hit[l] |= p[0] == top;
    }
    let per_component: Vec<ComponentShape> = (0..parts.count())
        .map(|i| ComponentShape {
            vertical: bottom_hit[i] && top_hit[i],
            horizontal: left_hit[i] && right_hit[i],
        })
        .collect();
    Ok(ShapeFlags {
        vertical_like: per_component.iter().all(|s| s.vertical),
        horizontal_like: per_component.iter().all(|s| s.horizontal),
        per_component,
    })
}

/// Order the components of a vertical-like 2-D set from left to right.
///
/// Returns component ids sorted by the minimum `x` over their digits (ties
/// broken by id). Two disjoint bottom-to-top components cannot cross, so
/// for the sets this is used on the minimum column reproduces the planar
/// left-to-right order — their column ranges may still overlap, as with
/// staggered blocks sharing a column at different heights.
pub fn arrange_left_to_right(d: &DigitSet, parts: &ComponentDecomposition) -> Result<Vec<u32>> {
    let shapes = shape_flags(d, parts)?;
    if let Some(bad) = shapes.per_component.iter().position(|s| !s.vertical) {
        return Err(Error::unsupported(
            "digits",
            format!("component {bad} does not join the bottom row to the top row"),
        ));
    }
    let mut min_x = vec![i64::MAX; parts.count()];
    for (p, &label) in d.digits().iter().zip(parts.labels()) {
        let l = label as usize;
        min_x[l] = min_x[l].min(p[0]);
    }
    let mut order: Vec<u32> = (0..parts.count() as u32).collect();
    order.sort_by_key(|&i| (min_x[i as usize], i));
    Ok(order)
}
