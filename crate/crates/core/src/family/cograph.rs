//! Dichromatic and clique numbers of co-graph expressions, by one bottom-up
//! pass over the tree.
//!
//! Series composition adds every arc in both directions between the sides,
//! so any acyclic class meeting both sides would contain a 2-cycle: classes
//! cannot straddle the sides and the values add. The other three
//! compositions add no arcs from the right side back to the left, so a left
//! class and a right class can share a color — no cross cycle can close —
//! and the values take the maximum.

use crate::digraph::Coloring;
use crate::expr::{DiCoExpr, DiCoExpression};

/// Dichromatic number of the digraph denoted by `e`, with an optimal
/// coloring (vertex ids in left-to-right leaf order, matching the
/// evaluator). Runs in time linear in the expression size.
pub fn cograph_dcn(e: &DiCoExpression) -> (usize, Coloring) {
    let (chi, colors) = rec(e.root());
    let witness = Coloring::new(colors).expect("recursion colors every leaf");
    debug_assert_eq!(witness.num_colors(), chi);
    (chi, witness)
}

/// (value, colors of the subtree's vertices in leaf order)
fn rec(e: &DiCoExpr) -> (usize, Vec<usize>) {
    match e {
        DiCoExpr::Vertex { .. } => (1, vec![1]),
        DiCoExpr::Union { left, right }
        | DiCoExpr::Order { left, right }
        | DiCoExpr::DUnion { left, right, .. } => {
            let (lchi, mut lcolors) = rec(left);
            let (rchi, rcolors) = rec(right);
            lcolors.extend(rcolors);
            (lchi.max(rchi), lcolors)
        }
        DiCoExpr::Series { left, right } => {
            let (lchi, mut lcolors) = rec(left);
            let (rchi, rcolors) = rec(right);
            lcolors.extend(rcolors.into_iter().map(|c| c + lchi));
            (lchi + rchi, lcolors)
        }
    }
}

/// Size of the largest complete bioriented subdigraph of the digraph
/// denoted by `e`. Only series composition creates mutual adjacency, so the
/// recursion is the same with the witness dropped.
pub fn cograph_clique_number(e: &DiCoExpression) -> usize {
    fn rec(e: &DiCoExpr) -> usize {
        match e {
            DiCoExpr::Vertex { .. } => 1,
            DiCoExpr::Union { left, right }
            | DiCoExpr::Order { left, right }
            | DiCoExpr::DUnion { left, right, .. } => rec(left).max(rec(right)),
            DiCoExpr::Series { left, right } => rec(left) + rec(right),
        }
    }
    rec(e.root())
}
