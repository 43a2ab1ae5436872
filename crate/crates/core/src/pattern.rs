//! Plain-text pattern documents for digit sets.
//!
//! ```text
//! fracsq v1
//! dim 2
//! base 3
//! ###
//! #.#
//! ###
//! ```
//!
//! The header is three fixed lines. The grid uses `#` for a digit and `.`
//! for an empty cell; grid row 1 is the *top* row (`y = N-1`). A 3-D
//! document holds `N` such grids separated by exactly one blank line each,
//! the first grid being the top slice (`z = N-1`). Lines starting with `%`
//! after the header are comments. Parse errors cite 1-based physical line
//! numbers.

use crate::digits::{DigitSet, Point};
use crate::error::{Error, Result};

/// Parse a pattern document into a digit set.
pub fn parse_pattern(text: &str) -> Result<DigitSet> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .collect();

    let header = |idx: usize| -> Result<(usize, &str)> {
        lines.get(idx).copied().ok_or_else(|| {
            Error::PatternDocument(format!(
                "unexpected end of input: missing header line {}",
                idx + 1
            ))
        })
    };

    let (n1, l1) = header(0)?;
    if l1 != "fracsq v1" {
        return Err(Error::Pattern {
            line: n1,
            msg: format!("expected \"fracsq v1\", found {l1:?}"),
        });
    }
    let (n2, l2) = header(1)?;
    let dim: usize = match l2 {
        "dim 2" => 2,
        "dim 3" => 3,
        _ => {
            return Err(Error::Pattern {
                line: n2,
                msg: format!("expected \"dim 2\" or \"dim 3\", found {l2:?}"),
            })
        }
    };
    let (n3, l3) = header(2)?;
    let base: i64 = match l3.strip_prefix("base ") {
        Some(v) => v.parse().map_err(|_| Error::Pattern {
            line: n3,
            msg: format!("invalid base {v:?}"),
        })?,
        None => {
            return Err(Error::Pattern {
                line: n3,
                msg: format!("expected \"base <N>\", found {l3:?}"),
            })
        }
    };
    if base < 2 {
        return Err(Error::Pattern {
            line: n3,
            msg: format!("base must be at least 2, got {base}"),
        });
    }

    // Content stream after the header with comment lines removed.
    let mut content = lines[3..]
        .iter()
        .filter(|(_, l)| !l.starts_with('%'))
        .copied()
        .peekable();
    let n = base as usize;
    let blocks = if dim == 3 { n } else { 1 };
    let mut digits: Vec<Point> = Vec::new();

    for block in 0..blocks {
        if block > 0 {
            // Exactly one blank separator line between consecutive grids.
            match content.next() {
                Some((_, "")) => {}
                Some((no, l)) => {
                    return Err(Error::Pattern {
                        line: no,
                        msg: format!("expected a blank line between grids, found {l:?}"),
                    })
                }
                None => {
                    return Err(Error::PatternDocument(format!(
                        "unexpected end of input: expected {blocks} grids, found {block}"
                    )))
                }
            }
        }
        let z = if dim == 3 { (n - 1 - block) as i64 } else { 0 };
        for row in 0..n {
            let (no, line) = match content.next() {
                Some(pair) => pair,
                None => {
                    return Err(Error::PatternDocument(format!(
                        "unexpected end of input: expected {n} grid rows, found {row}"
                    )))
                }
            };
            if line.is_empty() {
                return Err(Error::Pattern {
                    line: no,
                    msg: "unexpected blank line inside a grid".into(),
                });
            }
            let chars: Vec<char> = line.chars().collect();
            if chars.len() != n {
                return Err(Error::Pattern {
                    line: no,
                    msg: format!("expected {n} characters, found {}", chars.len()),
                });
            }
            let y = (n - 1 - row) as i64;
            for (col, &c) in chars.iter().enumerate() {
                match c {
                    '#' => digits.push([col as i64, y, z]),
                    '.' => {}
                    other => {
                        return Err(Error::Pattern {
                            line: no,
                            msg: format!("illegal character {other:?} (expected '#' or '.')"),
                        })
                    }
                }
            }
        }
    }

    // Only blank lines may trail the final grid.
    for (no, l) in content {
        if !l.is_empty() {
            return Err(Error::Pattern {
                line: no,
                msg: format!("unexpected content after grid: {l:?}"),
            });
        }
    }

    if digits.is_empty() {
        return Err(Error::PatternDocument("empty digit set (no '#' cells)".into()));
    }
    DigitSet::new(base, dim, digits)
}

/// Serialize a digit set as a pattern document. `parse_pattern` of the
/// result reproduces the digit set exactly.
pub fn to_pattern(d: &DigitSet) -> String {
    let n = d.base();
    let mut out = String::new();
    out.push_str("fracsq v1\n");
    out.push_str(&format!("dim {}\n", d.dim()));
    out.push_str(&format!("base {n}\n"));
    let blocks: Vec<i64> = if d.dim() == 3 {
        (0..n).rev().collect()
    } else {
        vec![0]
    };
    for (bi, &z) in blocks.iter().enumerate() {
        if bi > 0 {
            out.push('\n');
        }
        for y in (0..n).rev() {
            for x in 0..n {
                out.push(if d.contains([x, y, z]) { '#' } else { '.' });
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CARPET: &str = "fracsq v1\ndim 2\nbase 3\n###\n#.#\n###\n";

    #[test]
    fn parses_carpet() {
        let d = parse_pattern(CARPET).unwrap();
        assert_eq!(d.base(), 3);
        assert_eq!(d.dim(), 2);
        assert_eq!(d.len(), 8);
        assert!(!d.contains([1, 1, 0]));
    }

    #[test]
    fn top_row_is_high_y() {
        let d = parse_pattern("fracsq v1\ndim 2\nbase 2\n#.\n.#\n").unwrap();
        let got: Vec<(i64, i64)> = d.digits().iter().map(|p| (p[0], p[1])).collect();
        assert_eq!(got, vec![(1, 0), (0, 1)]);
    }

    #[test]
    fn comments_and_crlf_are_tolerated() {
        let text = "fracsq v1\r\ndim 2\r\nbase 2\r\n% top row\r\n#.\r\n.#\r\n% done\r\n";
        let d = parse_pattern(text).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn header_errors_cite_lines() {
        let err = parse_pattern("fracsq v2\ndim 2\nbase 2\n##\n##\n").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
        let err = parse_pattern("fracsq v1\ndim 4\nbase 2\n##\n##\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = parse_pattern("fracsq v1\ndim 2\nbase x\n##\n##\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn grid_errors_cite_lines() {
        let err = parse_pattern("fracsq v1\ndim 2\nbase 3\n###\n#.#.\n###\n").unwrap_err();
        assert!(
            err.to_string().contains("line 5") && err.to_string().contains("found 4"),
            "{err}"
        );
        let err = parse_pattern("fracsq v1\ndim 2\nbase 3\n###\n#x#\n###\n").unwrap_err();
        assert!(err.to_string().contains("'x'"), "{err}");
        let err = parse_pattern("fracsq v1\ndim 2\nbase 3\n###\n#.#\n").unwrap_err();
        assert!(err.to_string().contains("expected 3 grid rows"), "{err}");
        let err = parse_pattern("fracsq v1\ndim 2\nbase 2\n##\n##\n##\n").unwrap_err();
        assert!(err.to_string().contains("line 6"), "{err}");
    }

    #[test]
    fn empty_digit_set_is_rejected() {
        let err = parse_pattern("fracsq v1\ndim 2\nbase 2\n..\n..\n").unwrap_err();
        assert!(err.to_string().contains("empty digit set"), "{err}");
    }

    #[test]
    fn three_dimensional_blocks() {
        // Two slices: top slice (z=1) has one digit at (0,1), bottom slice
        // (z=0) has one at (1,0).
        let text = "fracsq v1\ndim 3\nbase 2\n#.\n..\n\n..\n.#\n";
        let d = parse_pattern(text).unwrap();
        assert_eq!(d.dim(), 3);
        let got: Vec<Point> = d.digits().to_vec();
        assert_eq!(got, vec![[1, 0, 0], [0, 1, 1]]);
    }

    #[test]
    fn missing_blank_separator_is_an_error() {
        let text = "fracsq v1\ndim 3\nbase 2\n#.\n..\n..\n.#\n";
        let err = parse_pattern(text).unwrap_err();
        assert!(err.to_string().contains("blank line"), "{err}");
    }

    #[test]
    fn double_blank_separator_is_an_error() {
        let text = "fracsq v1\ndim 3\nbase 2\n#.\n..\n\n\n..\n.#\n";
        let err = parse_pattern(text).unwrap_err();
        assert!(err.to_string().contains("blank line inside a grid"), "{err}");
    }

    #[test]
    fn round_trip_2d_and_3d() {
        for text in [
            CARPET,
            "fracsq v1\ndim 3\nbase 2\n#.\n..\n\n..\n.#\n",
            "fracsq v1\ndim 2\nbase 2\n#.\n.#\n",
        ] {
            let d = parse_pattern(text).unwrap();
            assert_eq!(parse_pattern(&to_pattern(&d)).unwrap(), d);
        }
    }

    #[test]
    fn serializer_is_exact_for_carpet() {
        let d = parse_pattern(CARPET).unwrap();
        assert_eq!(to_pattern(&d), CARPET);
    }
}
