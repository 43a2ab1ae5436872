//! Component graphs over digits and cell families.
//!
//! Three finite graphs drive the classification:
//!
//! 1. the *digit graph* on `D`, joining digits whose attractor pieces
//!    intersect (`m` components);
//! 2. the *level-1 graph* on pairs `(d, i)` of a digit and a digit-component
//!    index, where the pair stands for the family of level-2 cells
//!    `N·d + D_i` (`M` components);
//! 3. the *level-2 graph* on pairs `(d, j)` of a digit and a component index
//!    of the refined digit set `D* = N·D + D`, standing for the level-3
//!    cells `N²·d + D*_j` (`M'` components).
//!
//! Whether two cell families carry intersecting attractor pieces is decided
//! by the offset automaton alone, so the families are never materialized:
//! a per-offset interaction table answers every pairwise query.

use std::collections::HashMap;

use crate::automaton::OffsetAutomaton;
use crate::digits::{add, canon_cmp, scale, sub, unit_offsets, DigitSet, Point};
use crate::dsf::DisjointSets;
use crate::error::{Error, Result};

/// A partition of an indexed family into connected components: a part count
/// and one label per element. Labels are canonical: part `k` is the one
/// whose first element precedes (in element order) the first element of
/// part `k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    count: usize,
    labels: Vec<u32>,
}

impl ComponentDecomposition {
    fn from_sets(sets: &mut DisjointSets) -> ComponentDecomposition {
        ComponentDecomposition {
            count: sets.set_count(),
            labels: sets.canonical_labels(),
        }
    }

    /// Number of parts.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Part label of each element, in element order.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Element indices of one part.
    pub fn members(&self, part: u32) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(i, &l)| (l == part).then_some(i))
            .collect()
    }
}

/// Decompose a family of lattice points into connected components, joining
/// `p` and `q` exactly when the attractor pieces in cells `p` and `q`
/// intersect, i.e. when `q - p` is an alive offset.
pub fn digit_components(
    points: &[Point],
    dim: usize,
    automaton: &OffsetAutomaton,
) -> ComponentDecomposition {
    debug_assert!(dim == automaton.dim());
    let index: HashMap<Point, u32> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let mut sets = DisjointSets::new(points.len());
    for (i, &p) in points.iter().enumerate() {
        for &w in automaton.alive_offsets() {
            if w == [0, 0, 0] {
                continue;
            }
            if let Some(&j) = index.get(&add(p, w)) {
                sets.union(i as u32, j);
            }
        }
    }
    ComponentDecomposition::from_sets(&mut sets)
}

/// A graph on vertices `(d, i)` — one per digit of an outer set and part of
/// an inner decomposition — with edges between vertices whose cell families
/// carry intersecting attractor pieces.
#[derive(Debug, Clone)]
pub struct LevelGraph {
    level: u32,
    nparts: usize,
    vertex_count: usize,
    components: ComponentDecomposition,
    edges: Vec<(u32, u32)>,
}

impl LevelGraph {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Parts of the inner decomposition (the second vertex coordinate).
    pub fn part_count(&self) -> usize {
        self.nparts
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dense vertex id of the pair `(digit_idx, part)`.
    pub fn vertex_id(&self, digit_idx: usize, part: usize) -> usize {
        debug_assert!(part < self.nparts);
        digit_idx * self.nparts + part
    }

    /// Number of connected components of the graph.
    pub fn component_count(&self) -> usize {
        self.components.count()
    }

    pub fn components(&self) -> &ComponentDecomposition {
        &self.components
    }

    /// Deduplicated undirected edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }
}

/// Interaction table: for each unit offset `u` and inner parts `i, j`,
/// whether some cells `a ∈ P_i`, `b ∈ P_j` satisfy
/// `alive(scale·u + (b - a))` — i.e. whether the families `scale·d + P_i`
/// and `scale·e + P_j` carry intersecting pieces whenever `e - d = u`.
///
/// Computed by enumeration over `(a, w, u)` with `b = a + w - scale·u`:
/// linear in `|inner| · |alive| · 3^dim`, independent of how many vertex
/// pairs are later queried.
fn interaction_table(
    scale_factor: i64,
    inner: &DigitSet,
    inner_parts: &ComponentDecomposition,
    automaton: &OffsetAutomaton,
) -> Vec<bool> {
    let units = unit_offsets(inner.dim());
    let np = inner_parts.count();
    let mut table = vec![false; units.len() * np * np];
    for (a_idx, &a) in inner.digits().iter().enumerate() {
        let i = inner_parts.labels()[a_idx] as usize;
        for &w in automaton.alive_offsets() {
            for (u_idx, &u) in units.iter().enumerate() {
                let b = sub(add(a, w), scale(u, scale_factor));
                if let Some(b_idx) = inner.digit_index(b) {
                    let j = inner_parts.labels()[b_idx as usize] as usize;
                    table[(u_idx * np + i) * np + j] = true;
                }
            }
        }
    }
    table
}

fn build_level_graph(
    level: u32,
    outer: &DigitSet,
    scale_factor: i64,
    inner: &DigitSet,
    inner_parts: &ComponentDecomposition,
    automaton: &OffsetAutomaton,
) -> LevelGraph {
    let units = unit_offsets(outer.dim());
    let np = inner_parts.count();
    let table = interaction_table(scale_factor, inner, inner_parts, automaton);
    let vertex_count = outer.len() * np;
    let mut sets = DisjointSets::new(vertex_count);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (d_idx, &d) in outer.digits().iter().enumerate() {
        for (u_idx, &u) in units.iter().enumerate() {
            let Some(e_idx) = outer.digit_index(add(d, u)) else {
                continue;
            };
            for i in 0..np {
                for j in 0..np {
                    if table[(u_idx * np + i) * np + j] {
                        let a = (d_idx * np + i) as u32;
                        let b = e_idx * np as u32 + j as u32;
                        if a != b {
                            sets.union(a, b);
                            edges.push((a.min(b), a.max(b)));
                        }
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    LevelGraph {
        level,
        nparts: np,
        vertex_count,
        components: ComponentDecomposition::from_sets(&mut sets),
        edges,
    }
}

/// The level-1 graph: vertices `(d, i)` for `d ∈ D` and digit components
/// `D_i`, each standing for the level-2 cells `N·d + D_i`. Its component
/// count `M` bounds the digit-component count `m` from above.
pub fn level1_graph(
    d: &DigitSet,
    parts: &ComponentDecomposition,
    automaton: &OffsetAutomaton,
) -> LevelGraph {
    debug_assert_eq!(parts.labels().len(), d.len());
    build_level_graph(1, d, d.base(), d, parts, automaton)
}

/// The refined digit set `D* = N·D + D` over base `N²`, partitioned into
/// its connected components.
#[derive(Debug, Clone)]
pub struct DStar {
    set: DigitSet,
    parts: ComponentDecomposition,
}

impl DStar {
    /// The refined digit set (base `N²`, `|D|²` digits).
    pub fn set(&self) -> &DigitSet {
        &self.set
    }

    /// Component decomposition of the refined set, with exactly as many
    /// parts as the level-1 graph has components.
    pub fn parts(&self) -> &ComponentDecomposition {
        &self.parts
    }
}

/// Build the refined digit set `D* = N·D + D` and its component
/// decomposition.
///
/// The parts are assembled from the level-1 graph: the digit `N·d + e`
/// belongs to the part of the graph component containing the vertex
/// `(d, label(e))`. That assembly is then checked against an independent
/// component decomposition of `D*` computed from its own offset automaton;
/// any disagreement in count or partition is an internal error, never a
/// silent fallback.
pub fn dstar(
    d: &DigitSet,
    parts: &ComponentDecomposition,
    level1: &LevelGraph,
    limit: u64,
) -> Result<DStar> {
    debug_assert_eq!(level1.level(), 1);
    let required = (d.len() as u128) * (d.len() as u128);
    if required > limit as u128 {
        return Err(Error::Budget {
            module: "graphs",
            required,
            limit,
        });
    }
    let n = d.base();
    let mut labeled: Vec<(Point, u32)> = Vec::with_capacity(d.len() * d.len());
    for (d_idx, &dd) in d.digits().iter().enumerate() {
        for (e_idx, &e) in d.digits().iter().enumerate() {
            let part = parts.labels()[e_idx] as usize;
            let vid = level1.vertex_id(d_idx, part);
            let component = level1.components().labels()[vid];
            labeled.push((add(scale(dd, n), e), component));
        }
    }
    labeled.sort_by(|(p, _), (q, _)| canon_cmp(p, q));
    let set = DigitSet::new(n * n, d.dim(), labeled.iter().map(|&(p, _)| p).collect())?;
    // Renumber the carried-over labels by first occurrence so they are
    // directly comparable with a fresh decomposition.
    let mut rename: HashMap<u32, u32> = HashMap::new();
    let labels: Vec<u32> = labeled
        .iter()
        .map(|&(_, c)| {
            let next = rename.len() as u32;
            *rename.entry(c).or_insert(next)
        })
        .collect();
    let count = rename.len();
    if count != level1.component_count() {
        return Err(Error::Internal(format!(
            "refined digit set assembled into {count} parts but the level-1 \
             graph has {} components",
            level1.component_count()
        )));
    }
    let independent = digit_components(set.digits(), set.dim(), &OffsetAutomaton::build(&set));
    if independent.count() != count || independent.labels() != labels.as_slice() {
        return Err(Error::Internal(
            "refined digit set components disagree with the level-1 graph \
             component structure"
                .into(),
        ));
    }
    Ok(DStar {
        set,
        parts: independent,
    })
}

/// The level-2 graph: vertices `(d, j)` for `d ∈ D` and parts `D*_j` of the
/// refined set, each standing for the level-3 cells `N²·d + D*_j`. Its
/// component count `M'` decides the classification: `M' = M` means finitely
/// many components, `M' > M` means uncountably many.
pub fn level2_graph(d: &DigitSet, refined: &DStar, automaton: &OffsetAutomaton) -> LevelGraph {
    debug_assert_eq!(refined.set().base(), d.base() * d.base());
    build_level_graph(
        2,
        d,
        refined.set().base(),
        refined.set(),
        refined.parts(),
        automaton,
    )
}

fn vertex_name(p: Point, dim: usize, part: usize) -> String {
    if dim == 3 {
        format!("d{}_{}_{}__i{}", p[0], p[1], p[2], part + 1)
    } else {
        format!("d{}_{}__i{}", p[0], p[1], part + 1)
    }
}

/// Render a level graph in DOT format. Vertices are named after their digit
/// and one-based part index (`d<x>_<y>__i<k>`), filled with one color per
/// graph component. Output is deterministic.
pub fn to_dot(outer: &DigitSet, graph: &LevelGraph) -> String {
    let name = |vid: usize| {
        vertex_name(
            outer.digits()[vid / graph.part_count()],
            outer.dim(),
            vid % graph.part_count(),
        )
    };
    let mut out = String::new();
    out.push_str(&format!("graph level{} {{\n", graph.level()));
    out.push_str("  node [style=filled, shape=box, fontname=\"monospace\"];\n");
    for vid in 0..graph.vertex_count() {
        let component = graph.components().labels()[vid];
        // Golden-ratio hue walk: visually distinct colors for any count.
        let hue = (f64::from(component) * 0.618_033_988_749_895).fract();
        out.push_str(&format!(
            "  {} [fillcolor=\"{hue:.3} 0.450 0.950\"];\n",
            name(vid)
        ));
    }
    for &(a, b) in graph.edges() {
        out.push_str(&format!("  {} -- {};\n", name(a as usize), name(b as usize)));
    }
    out.push_str("}\n");
    out
}
