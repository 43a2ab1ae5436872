//! Plain-text raster rendering of iterates.

use std::collections::HashSet;
use std::fmt::Write as _;

use fracsq_core::digits::DigitSet;
use fracsq_core::error::{Error, Result};
use fracsq_core::grid::GridSet;

/// Render the `depth`-th iterate as a plain PGM (P2) image: one pixel per
/// grid cell, `0` (ink) where the cell belongs to the iterate and `255`
/// elsewhere. Rows are emitted top-down so the image matches the pattern
/// orientation, one row per line. Output is byte-deterministic.
pub fn render_pgm(d: &DigitSet, depth: u32, limit: u64) -> Result<String> {
    if d.dim() != 2 {
        return Err(Error::unsupported(
            "render",
            "images are rendered for two-dimensional sets only",
        ));
    }
    let g = GridSet::iterate(d, depth, limit)?;
    let side = g.side();
    let cells: HashSet<(i64, i64)> = g.cells().iter().map(|p| (p[0], p[1])).collect();
    let mut out = String::with_capacity(side as usize * side as usize * 4 + 16);
    write!(out, "P2\n{side} {side}\n255\n").unwrap();
    for y in (0..side).rev() {
        for x in 0..side {
            if x > 0 {
                out.push(' ');
            }
            out.push_str(if cells.contains(&(x, y)) { "0" } else { "255" });
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fracsq_core::fixtures::builtin;

    #[test]
    fn first_iterate_of_the_carpet() {
        let d = builtin("carpet").unwrap();
        let pgm = render_pgm(&d, 1, 1 << 16).unwrap();
        assert_eq!(
            pgm,
            "P2\n3 3\n255\n\
             0 0 0\n\
             0 255 0\n\
             0 0 0\n"
        );
    }

    #[test]
    fn rows_run_top_down() {
        // Single digit at the origin: ink must land in the bottom row.
        let d = DigitSet::new(2, 2, vec![[0, 0, 0]]).unwrap();
        let pgm = render_pgm(&d, 1, 1 << 16).unwrap();
        assert_eq!(pgm, "P2\n2 2\n255\n255 255\n0 255\n");
    }

    #[test]
    fn ink_count_matches_cell_count() {
        let d = builtin("carpet").unwrap();
        let pgm = render_pgm(&d, 3, 1 << 20).unwrap();
        let zeros = pgm
            .lines()
            .skip(3)
            .flat_map(str::split_whitespace)
            .filter(|&v| v == "0")
            .count();
        assert_eq!(zeros, 512); // 8^3 cells
    }

    #[test]
    fn cubes_are_refused() {
        let d = builtin("diag3d").unwrap();
        assert!(render_pgm(&d, 2, 1 << 16).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let d = builtin("carpet").unwrap();
        assert!(matches!(
            render_pgm(&d, 5, 100),
            Err(Error::Budget { .. })
        ));
    }
}
