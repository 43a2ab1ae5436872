//! Named digit-set fixtures and the exact-component-count generator.

use crate::digits::{DigitSet, Point, DEFAULT_CELL_LIMIT};
use crate::error::{Error, Result};

/// Names accepted by [`builtin`]. `exact_m(M)` takes a literal count, e.g.
/// `exact_m(5)`.
pub const BUILTIN_NAMES: &[&str] = &[
    "carpet",
    "two_pillars",
    "diag_pair",
    "example21_like",
    "diag3d",
    "exact_m(M)",
];

fn pts2(pts: impl IntoIterator<Item = (i64, i64)>) -> Vec<Point> {
    pts.into_iter().map(|(x, y)| [x, y, 0]).collect()
}

/// Look up a fixture by name.
pub fn builtin(name: &str) -> Result<DigitSet> {
    match name {
        // All of {0,1,2}^2 except the center: the classic connected square
        // with one hole.
        "carpet" => DigitSet::new(
            3,
            2,
            pts2((0..3).flat_map(|x| (0..3).map(move |y| (x, y)))
                .filter(|&(x, y)| (x, y) != (1, 1))),
        ),
        // Two full-height columns: a Cantor set of columns crossed with
        // the unit interval. Uncountably many components.
        "two_pillars" => DigitSet::new(
            3,
            2,
            pts2([0, 2].into_iter().flat_map(|x| (0..3).map(move |y| (x, y)))),
        ),
        // The main diagonal segment.
        "diag_pair" => DigitSet::new(2, 2, pts2([(0, 0), (1, 1)])),
        // Two point-symmetric pieces over base 5: a full left column with a
        // 2x2 block hanging off its top, and the 180-degree rotation of
        // that. Exactly two components.
        "example21_like" => {
            let d1 = [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)];
            let d2 = d1.iter().map(|&(x, y)| (4 - x, 4 - y));
            DigitSet::new(5, 2, pts2(d1.into_iter().chain(d2)))
        }
        // The four even-parity digits of {0,1}^3 over base 2 (the
        // tetrahedral digit set). Every pair of level-1 cubes shares an
        // edge whose midpoint lies in the attractor.
        "diag3d" => DigitSet::new(
            2,
            3,
            vec![[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]],
        ),
        _ => {
            if let Some(arg) = name.strip_prefix("exact_m(").and_then(|s| s.strip_suffix(')')) {
                let m: u32 = arg.parse().map_err(|_| {
                    Error::unsupported("fixtures", format!("invalid component count {arg:?}"))
                })?;
                return generate_exact_m(m);
            }
            Err(Error::unsupported(
                "fixtures",
                format!("unknown builtin {name:?}; known names: {BUILTIN_NAMES:?}"),
            ))
        }
    }
}

/// Generate a digit set over base `m^2` whose attractor has exactly `m`
/// connected components, for any `m ≥ 5`.
///
/// The set is built from a staircase block
/// `A = { (i, j) : 0 ≤ i < m, i·m ≤ j < (i+1)·m }` — `m` columns of height
/// `m` climbing from bottom-left to top-right — plus two boundary columns
/// `B = { (0, j), (m²-1, m²-1-j) : 2m ≤ j ≤ m²-1 }`. The full set is `B`
/// together with the `m` translates `A + (km, 0)`. Each staircase copy is
/// one component (the boundary columns attach to the outermost copies and
/// make the diagonal corner contacts of the staircases genuine), giving
/// `|D| = m³ + 2m² - 4m` digits and exactly `m` components.
pub fn generate_exact_m(m: u32) -> Result<DigitSet> {
    if m < 5 {
        return Err(Error::unsupported(
            "generate",
            format!("component count must be at least 5, got {m}"),
        ));
    }
    let m = m as i64;
    let n = m * m;
    let expected = (m * m * m + 2 * m * m - 4 * m) as u128;
    if expected > DEFAULT_CELL_LIMIT as u128 {
        return Err(Error::Budget {
            module: "generate",
            required: expected,
            limit: DEFAULT_CELL_LIMIT,
        });
    }
    let mut digits: Vec<Point> = Vec::with_capacity(expected as usize);
    // m translated staircase copies.
    for k in 0..m {
        for i in 0..m {
            for j in i * m..(i + 1) * m {
                digits.push([k * m + i, j, 0]);
            }
        }
    }
    // Boundary columns.
    for j in 2 * m..n {
        digits.push([0, j, 0]);
        digits.push([n - 1, n - 1 - j, 0]);
    }
    let d = DigitSet::new(n, 2, digits)?;
    if d.len() as u128 != expected {
        // The pieces are pairwise disjoint by construction; a shortfall
        // after deduplication means the construction itself is broken.
        return Err(Error::Internal(format!(
            "exact-m generator produced {} digits, expected {expected}",
            d.len()
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_cardinalities() {
        for (name, base, dim, count) in [
            ("carpet", 3, 2, 8),
            ("two_pillars", 3, 2, 6),
            ("diag_pair", 2, 2, 2),
            ("example21_like", 5, 2, 18),
            ("diag3d", 2, 3, 4),
        ] {
            let d = builtin(name).unwrap();
            assert_eq!(d.base(), base, "{name}");
            assert_eq!(d.dim(), dim, "{name}");
            assert_eq!(d.len(), count, "{name}");
        }
    }

    #[test]
    fn exact_m_size_formula() {
        let d5 = generate_exact_m(5).unwrap();
        assert_eq!(d5.base(), 25);
        assert_eq!(d5.len(), 155); // 125 + 50 - 20

        let d6 = generate_exact_m(6).unwrap();
        assert_eq!(d6.base(), 36);
        assert_eq!(d6.len(), 264); // 216 + 72 - 24
    }

    #[test]
    fn exact_m_rejects_small_counts() {
        for m in 0..5 {
            assert!(generate_exact_m(m).is_err(), "m={m}");
        }
    }

    #[test]
    fn exact_m_key_corners_present() {
        // The boundary columns exist to realize the diagonal corner
        // contacts: (0, N-1) and (N-1, 0) must both be digits.
        let d = generate_exact_m(5).unwrap();
        assert!(d.contains([0, 24, 0]));
        assert!(d.contains([24, 0, 0]));
        assert!(d.contains([24, 24, 0])); // top of the last staircase
        assert!(!d.contains([3, 24, 0])); // staircase interiors stay sparse
    }

    #[test]
    fn builtin_parses_exact_m() {
        let d = builtin("exact_m(5)").unwrap();
        assert_eq!(d.len(), 155);
        assert!(builtin("exact_m(4)").is_err());
        assert!(builtin("exact_m(x)").is_err());
        assert!(builtin("no_such_fixture").is_err());
    }
}
