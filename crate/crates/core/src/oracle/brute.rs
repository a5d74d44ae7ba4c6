//! Exhaustive searches for the three reference quantities: dichromatic
//! number, chromatic number, and bidirectional clique number.
//!
//! Both coloring searches break symmetry the same way: vertices are colored
//! in id order and a vertex may only open color `c+1` when colors `1..=c`
//! are already in use. With that rule, searching bounds r = 1, 2, ... in
//! turn means the first feasible assignment found uses exactly χ colors.

use crate::digraph::{acyclicity_of_subset, Coloring, Digraph, UndiGraph};

use super::OracleError;

/// Dichromatic number by backtracking, with an optimal coloring.
/// `max_r` defaults to n, which always suffices.
pub fn brute_force_dcn(
    g: &Digraph,
    max_r: Option<usize>,
) -> Result<(usize, Coloring), OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new()).expect("empty coloring")));
    }
    let max_r = max_r.unwrap_or(n).min(n);
    let mut colors = vec![0usize; n + 1];
    for r in 1..=max_r {
        if extend_acyclic(g, &mut colors, 1, 1, r) {
            let witness = Coloring::new(colors[1..].to_vec()).expect("search colors all");
            debug_assert_eq!(witness.num_colors(), r);
            return Ok((r, witness));
        }
    }
    Err(OracleError::Exceeded { max_r })
}

fn extend_acyclic(g: &Digraph, colors: &mut [usize], v: usize, used: usize, r: usize) -> bool {
    if v == colors.len() {
        return used == r;
    }
    let limit = r.min(used + 1);
    for c in 1..=limit {
        colors[v] = c;
        if class_acyclic_upto(g, colors, v, c)
            && extend_acyclic(g, colors, v + 1, used.max(c), r)
        {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Does color class `c`, restricted to vertices `1..=v`, induce an acyclic
/// subdigraph? Any cycle in the class must pass through `v` (the class was
/// acyclic before `v` joined), but a full check is cheap at these sizes.
fn class_acyclic_upto(g: &Digraph, colors: &[usize], v: usize, c: usize) -> bool {
    let mut in_set = vec![false; g.n() + 1];
    for u in 1..=v {
        in_set[u] = colors[u] == c;
    }
    acyclicity_of_subset(g, &in_set).is_acyclic()
}

/// Chromatic number of an undirected graph by the same backtracking scheme.
pub fn brute_force_chromatic(h: &UndiGraph) -> (usize, Coloring) {
    let n = h.n();
    if n == 0 {
        return (0, Coloring::new(Vec::new()).expect("empty coloring"));
    }
    let mut colors = vec![0usize; n + 1];
    for r in 1..=n {
        if extend_proper(h, &mut colors, 1, 1, r) {
            let witness = Coloring::new(colors[1..].to_vec()).expect("search colors all");
            return (r, witness);
        }
    }
    unreachable!("n colors always properly color n vertices")
}

fn extend_proper(h: &UndiGraph, colors: &mut [usize], v: usize, used: usize, r: usize) -> bool {
    if v == colors.len() {
        return used == r;
    }
    let limit = r.min(used + 1);
    'next: for c in 1..=limit {
        for &u in h.neighbors(v) {
            if u < v && colors[u] == c {
                continue 'next;
            }
        }
        colors[v] = c;
        if extend_proper(h, colors, v + 1, used.max(c), r) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Size of the largest vertex set inducing a complete bioriented
/// subdigraph. Equals the clique number of the graph whose edges are the
/// symmetric arc pairs of `g`.
pub fn brute_force_clique_number_d(g: &Digraph) -> usize {
    let n = g.n();
    let bidir = |u: usize, v: usize| g.has_arc(u, v) && g.has_arc(v, u);
    let mut best = 0;
    let mut chosen: Vec<usize> = Vec::new();

    fn grow(
        v: usize,
        n: usize,
        bidir: &impl Fn(usize, usize) -> bool,
        chosen: &mut Vec<usize>,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if v > n || chosen.len() + (n - v + 1) <= *best {
            return;
        }
        // Either take v (if compatible with everything chosen) or skip it.
        if chosen.iter().all(|&u| bidir(u, v)) {
            chosen.push(v);
            grow(v + 1, n, bidir, chosen, best);
            chosen.pop();
        }
        grow(v + 1, n, bidir, chosen, best);
    }

    grow(1, n, &bidir, &mut chosen, &mut best);
    best
}
