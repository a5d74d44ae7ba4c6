//! Text formats: ".dg" digraphs, ".col" colorings, and DOT export.
//!
//! A ".dg" file holds optional '#' comment lines, then "n m", then m arc
//! lines "u v" (1-based). A ".col" file holds one "v c" line per vertex.
//! Blank lines and comments are tolerated everywhere on input; writers emit
//! the bare data. Trailing newlines are optional on input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::{Coloring, Digraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is colored twice")]
    DuplicateVertex(usize),
}

/// Data lines with their 1-based line numbers, comments and blanks skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_ints(line: usize, text: &str, what: [&str; 2]) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace();
    let mut next = |name: &str| {
        it.next()
            .ok_or_else(|| FormatError::Syntax {
                line,
                msg: format!("missing {name}"),
            })?
            .parse::<usize>()
            .map_err(|_| FormatError::Syntax {
                line,
                msg: format!("{name} is not a non-negative integer"),
            })
    };
    let pair = (next(what[0])?, next(what[1])?);
    if it.next().is_some() {
        return Err(FormatError::Syntax {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

pub fn parse_dg(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let (n, m) = two_ints(line, header, ["n", "m"])?;
    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, arc) = lines.next().ok_or_else(|| FormatError::Syntax {
            line: text.lines().count() + 1,
            msg: format!("expected {m} arcs, found {}", arcs.len()),
        })?;
        arcs.push(two_ints(line, arc, ["u", "v"])?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::Syntax {
            line,
            msg: "content after the last arc".into(),
        });
    }
    Ok(Digraph::new(n, &arcs)?)
}

pub fn write_dg(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.arcs().len());
    for &(u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a coloring for a digraph on `n` vertices: each vertex exactly once,
/// arbitrary positive colors, compacted to 1..=r.
pub fn parse_col(text: &str, n: usize) -> Result<Coloring, FormatError> {
    let mut colors = vec![0usize; n];
    for (line, l) in data_lines(text) {
        let (v, c) = two_ints(line, l, ["vertex", "color"])?;
        if v == 0 || v > n {
            return Err(GraphError::VertexOutOfRange { v, n }.into());
        }
        if c == 0 {
            return Err(FormatError::Syntax {
                line,
                msg: "colors start at 1".into(),
            });
        }
        if colors[v - 1] != 0 {
            return Err(FormatError::DuplicateVertex(v));
        }
        colors[v - 1] = c;
    }
    Ok(Coloring::from_sparse(colors)?)
}

pub fn write_col(c: &Coloring) -> String {
    let mut out = String::new();
    for (i, &color) in c.per_vertex().iter().enumerate() {
        let _ = writeln!(out, "{} {color}", i + 1);
    }
    out
}

const DOT_PALETTE: [&str; 10] = [
    "#a6cee3", "#fb9a99", "#b2df8a", "#fdbf6f", "#cab2d6", "#1f78b4", "#33a02c", "#e31a1c",
    "#ff7f00", "#6a3d9a",
];

/// Graphviz text for `g`; with a coloring, nodes are filled per color class
/// (the palette repeats past ten colors).
pub fn to_dot(g: &Digraph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("digraph g {\n  node [shape=circle];\n");
    for v in 1..=g.n() {
        match coloring {
            Some(c) => {
                let fill = DOT_PALETTE[(c.color(v) - 1) % DOT_PALETTE.len()];
                let _ = writeln!(
                    out,
                    "  {v} [style=filled, fillcolor=\"{fill}\", xlabel=\"c{}\"];",
                    c.color(v)
                );
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::*;

    #[test]
    fn dg_round_trip() {
        let g = directed_cycle(4);
        let text = write_dg(&g);
        assert_eq!(text, "4 4\n1 2\n2 3\n3 4\n4 1\n");
        let back = parse_dg(&text).unwrap();
        assert_eq!(back.arcs(), g.arcs());
        assert_eq!(back.n(), g.n());
    }

    #[test]
    fn dg_reader_tolerates_comments_blanks_and_no_final_newline() {
        let g = parse_dg("# a triangle\n\n3 3\n1 2\n# middle\n2 3\n3 1").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.arcs(), &[(1, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn dg_reader_reports_positions() {
        assert_eq!(
            parse_dg(""),
            Err(FormatError::Syntax {
                line: 1,
                msg: "missing \"n m\" header".into()
            })
        );
        assert!(matches!(
            parse_dg("2 two\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_dg("2 2\n1 2\n"),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_dg("2 1\n1 2\n2 1\n"),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_dg("2 1\n1 2 9\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn dg_reader_propagates_graph_validation() {
        assert_eq!(
            parse_dg("2 1\n1 1\n"),
            Err(FormatError::Graph(GraphError::SelfLoop(1)))
        );
        assert_eq!(
            parse_dg("2 1\n1 3\n"),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { v: 3, n: 2 }))
        );
    }

    #[test]
    fn col_round_trip_and_compaction() {
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(write_col(&c), "1 1\n2 2\n3 1\n");
        assert_eq!(parse_col("1 1\n2 2\n3 1", 3).unwrap(), c);
        // sparse colors compact, order of lines is free
        assert_eq!(parse_col("3 5\n1 5\n2 9", 3).unwrap().per_vertex(), &[1, 2, 1]);
    }

    #[test]
    fn col_reader_rejects_bad_input() {
        assert_eq!(
            parse_col("1 1\n1 2\n", 2),
            Err(FormatError::DuplicateVertex(1))
        );
        assert!(matches!(
            parse_col("1 1\n", 2),
            Err(FormatError::Graph(GraphError::PartialColoring(2)))
        ));
        assert_eq!(
            parse_col("1 1\n3 1\n", 2),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { v: 3, n: 2 }))
        );
        assert!(matches!(
            parse_col("1 0\n2 1\n", 2),
            Err(FormatError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn dot_output_marks_color_classes() {
        let g = directed_cycle(3);
        let c = Coloring::new(vec![1, 2, 2]).unwrap();
        let dot = to_dot(&g, Some(&c));
        assert!(dot.starts_with("digraph g {"));
        assert!(dot.contains("  1 [style=filled, fillcolor=\"#a6cee3\", xlabel=\"c1\"];"));
        assert!(dot.contains("  2 [style=filled, fillcolor=\"#fb9a99\", xlabel=\"c2\"];"));
        assert!(dot.contains("  3 -> 1;"));
        let plain = to_dot(&g, None);
        assert!(plain.contains("  1;"));
        assert!(!plain.contains("fillcolor"));
    }
}
