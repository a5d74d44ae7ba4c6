//! Integer-programming formulation of minimum acyclic coloring, exported as
//! CPLEX-LP text for external MILP solvers, plus a reader for their
//! solutions.
//!
//! Variables, for a digraph on n vertices: binary `y_j` (color j is used),
//! binary `x_i_j` (vertex i has color j), integer `t_i` in 0..=n-1 (position
//! of vertex i in a topological order of its color class). The objective
//! minimizes the number of used colors. Each arc (u,v) forces, for every
//! color j, `t_v >= t_u + 1 - n*(2 - x_u_j - x_v_j)`: inactive unless both
//! endpoints share color j, in which case the t-values must strictly
//! increase along the arc — so no color class can contain a cycle. The
//! conjunction "same color on both ends" is linearized with big-M = n.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::{check_acyclic_coloring, Coloring, ColoringVerdict, Digraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IlpError {
    #[error("vertex {0} is not assigned exactly one color by the solution")]
    InfeasibleOrPartialSolution(usize),
    #[error("solution colors the cycle {cycle:?} monochromatically with color {color}")]
    InvalidColoring { color: usize, cycle: Vec<usize> },
}

/// The model skeleton for one digraph; see the module docs for the
/// formulation. Variable names and row order are deterministic.
#[derive(Debug, Clone)]
pub struct IlpModel {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl IlpModel {
    pub fn new(g: &Digraph) -> IlpModel {
        assert!(g.n() >= 1, "the model needs at least one vertex");
        IlpModel {
            n: g.n(),
            arcs: g.arcs().to_vec(),
        }
    }

    pub fn num_binary_vars(&self) -> usize {
        self.n + self.n * self.n
    }

    pub fn num_general_vars(&self) -> usize {
        self.n
    }

    pub fn num_assignment_rows(&self) -> usize {
        self.n
    }

    pub fn num_linking_rows(&self) -> usize {
        self.n * self.n
    }

    pub fn num_ordering_rows(&self) -> usize {
        self.arcs.len() * self.n
    }

    pub fn to_lp_text(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\\ minimum acyclic coloring of a digraph, n={}, m={}",
            n,
            self.arcs.len()
        );
        out.push_str("Minimize\n");
        push_wrapped(
            &mut out,
            " obj:",
            (1..=n).map(|j| format!("y_{j}")),
            " + ",
            "",
        );

        out.push_str("Subject To\n");
        for i in 1..=n {
            push_wrapped(
                &mut out,
                &format!(" assign_{i}:"),
                (1..=n).map(|j| format!("x_{i}_{j}")),
                " + ",
                " = 1",
            );
        }
        for i in 1..=n {
            for j in 1..=n {
                let _ = writeln!(out, " link_{i}_{j}: x_{i}_{j} - y_{j} <= 0");
            }
        }
        let rhs = 1 - 2 * n as i64;
        for &(u, v) in &self.arcs {
            for j in 1..=n {
                let _ = writeln!(
                    out,
                    " order_{u}_{v}_{j}: t_{v} - t_{u} - {n} x_{u}_{j} - {n} x_{v}_{j} >= {rhs}"
                );
            }
        }

        out.push_str("Bounds\n");
        for i in 1..=n {
            let _ = writeln!(out, " 0 <= t_{i} <= {}", n - 1);
        }
        out.push_str("General\n");
        push_wrapped(&mut out, "", (1..=n).map(|i| format!("t_{i}")), " ", "");
        out.push_str("Binary\n");
        let binaries = (1..=n)
            .map(|j| format!("y_{j}"))
            .chain((1..=n).flat_map(|i| (1..=n).map(move |j| format!("x_{i}_{j}"))));
        push_wrapped(&mut out, "", binaries, " ", "");
        out.push_str("End\n");
        out
    }
}

/// One wrapped logical line: items joined by `sep`, broken every few items
/// to stay well under LP-format line-length limits; continuation lines are
/// indented and, for sum rows, start with the separator's operator.
fn push_wrapped(
    out: &mut String,
    head: &str,
    items: impl Iterator<Item = String>,
    sep: &str,
    tail: &str,
) {
    const PER_LINE: usize = 10;
    out.push_str(head);
    for (idx, item) in items.enumerate() {
        if idx == 0 {
            out.push(' ');
        } else if idx % PER_LINE == 0 {
            out.push('\n');
            out.push_str("  ");
            out.push_str(sep.trim_start());
        } else {
            out.push_str(sep);
        }
        out.push_str(&item);
    }
    out.push_str(tail);
    out.push('\n');
}

pub fn export_lp(g: &Digraph) -> String {
    IlpModel::new(g).to_lp_text()
}

/// Reads a solver solution given as "name value" lines (extra columns and
/// unknown names are ignored, so raw output of common solvers works) and
/// rebuilds the coloring from the `x_i_j` entries, compacted to 1..=r and
/// validated against `g`.
pub fn import_solution(text: &str, g: &Digraph) -> Result<Coloring, IlpError> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    for line in text.lines() {
        let mut it = line.split_whitespace();
        let (Some(name), Some(value)) = (it.next(), it.next()) else {
            continue;
        };
        let Some((i, j)) = parse_x_name(name, n) else {
            continue;
        };
        let Ok(value) = value.parse::<f64>() else {
            continue;
        };
        if value >= 0.5 {
            if colors[i - 1] != 0 {
                return Err(IlpError::InfeasibleOrPartialSolution(i));
            }
            colors[i - 1] = j;
        }
    }
    if let Some(i) = colors.iter().position(|&c| c == 0) {
        return Err(IlpError::InfeasibleOrPartialSolution(i + 1));
    }
    let coloring = Coloring::from_sparse(colors).expect("entries are nonzero");
    match check_acyclic_coloring(g, &coloring).expect("coloring covers all of g") {
        ColoringVerdict::Valid => Ok(coloring),
        ColoringVerdict::Invalid { color, cycle, .. } => {
            Err(IlpError::InvalidColoring { color, cycle })
        }
    }
}

fn parse_x_name(name: &str, n: usize) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("x_")?;
    let (i, j) = rest.split_once('_')?;
    let (i, j) = (i.parse::<usize>().ok()?, j.parse::<usize>().ok()?);
    ((1..=n).contains(&i) && (1..=n).contains(&j)).then_some((i, j))
}
