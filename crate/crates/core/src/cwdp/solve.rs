//! Bottom-up evaluation of the signature DP over an expression tree, plus
//! witness extraction and a stable diagnostic dump.

use std::fmt::Write as _;

use crate::digraph::Coloring;
use crate::expr::{CwExpr, CwExpression};

use super::{sig_edge_insert, sig_leaf, sig_relabel, sig_union, DpError, Provenance, SigSet};

/// Flattened expression node; children precede parents (post-order ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeOp {
    Leaf { name: String, label: u32, vertex: usize },
    Union { left: usize, right: usize },
    EdgeInsert { from: u32, to: u32, child: usize },
    Relabel { from: u32, to: u32, child: usize },
}

/// Subtrees of `root` in post-order — the node order used by [`DpRun`].
pub fn postorder(root: &CwExpr) -> Vec<&CwExpr> {
    fn rec<'a>(e: &'a CwExpr, out: &mut Vec<&'a CwExpr>) {
        match e {
            CwExpr::Create { .. } => {}
            CwExpr::Union { left, right } => {
                rec(left, out);
                rec(right, out);
            }
            CwExpr::EdgeInsert { child, .. } | CwExpr::Relabel { child, .. } => rec(child, out),
        }
        out.push(e);
    }
    let mut out = Vec::new();
    rec(root, &mut out);
    out
}

fn flatten(root: &CwExpr) -> Vec<NodeOp> {
    fn rec(e: &CwExpr, nodes: &mut Vec<NodeOp>, next_vertex: &mut usize) -> usize {
        let op = match e {
            CwExpr::Create { name, label } => {
                let vertex = *next_vertex;
                *next_vertex += 1;
                NodeOp::Leaf {
                    name: name.clone(),
                    label: *label,
                    vertex,
                }
            }
            CwExpr::Union { left, right } => {
                let l = rec(left, nodes, next_vertex);
                let r = rec(right, nodes, next_vertex);
                NodeOp::Union { left: l, right: r }
            }
            CwExpr::EdgeInsert { from, to, child } => NodeOp::EdgeInsert {
                from: *from,
                to: *to,
                child: rec(child, nodes, next_vertex),
            },
            CwExpr::Relabel { from, to, child } => NodeOp::Relabel {
                from: *from,
                to: *to,
                child: rec(child, nodes, next_vertex),
            },
        };
        nodes.push(op);
        nodes.len() - 1
    }
    let mut nodes = Vec::new();
    let mut next_vertex = 1;
    rec(root, &mut nodes, &mut next_vertex);
    nodes
}

/// A completed DP run: one signature set per expression node.
#[derive(Debug, Clone)]
pub struct DpRun {
    nodes: Vec<NodeOp>,
    sets: Vec<SigSet>,
    num_vertices: usize,
}

impl DpRun {
    /// Evaluates the DP bottom-up over the whole expression.
    pub fn new(e: &CwExpression, cap: usize) -> Result<Self, DpError> {
        let nodes = flatten(e.root());
        let k = e.k();
        let mut sets: Vec<SigSet> = Vec::with_capacity(nodes.len());
        let mut num_vertices = 0;
        for op in &nodes {
            let set = match op {
                NodeOp::Leaf { label, .. } => {
                    num_vertices += 1;
                    sig_leaf(*label, k)?
                }
                NodeOp::Union { left, right } => sig_union(&sets[*left], &sets[*right], cap)?,
                NodeOp::EdgeInsert { from, to, child } => {
                    sig_edge_insert(&sets[*child], *from, *to, cap)?
                }
                NodeOp::Relabel { from, to, child } => {
                    sig_relabel(&sets[*child], *from, *to, cap)?
                }
            };
            sets.push(set);
        }
        Ok(DpRun {
            nodes,
            sets,
            num_vertices,
        })
    }

    pub fn nodes(&self) -> &[NodeOp] {
        &self.nodes
    }

    pub fn sigset(&self, node: usize) -> &SigSet {
        &self.sets[node]
    }

    pub fn root_sigset(&self) -> &SigSet {
        self.sets.last().expect("expressions are nonempty")
    }

    /// The dichromatic number: least class count among root signatures.
    pub fn dichromatic_number(&self) -> usize {
        self.root_sigset()
            .min_classes()
            .expect("every graph has at least the singleton partition")
    }

    /// True iff the evaluated digraph admits an acyclic coloring with at
    /// most `r` colors (equivalently, with exactly `r` once unused colors
    /// are allowed).
    pub fn decide(&self, r: usize) -> bool {
        self.dichromatic_number() <= r
    }

    /// An optimal coloring, rebuilt by walking provenance records from the
    /// first (fewest-classes) root signature down to the leaves. Vertex `v`
    /// receives the 1-based position of the root class its leaf descended
    /// into.
    pub fn witness(&self) -> Coloring {
        let root = self.sets.len() - 1;
        let root_sig = 0;
        let s = self.sets[root].sigs()[root_sig].num_classes();
        let mut vertex_color = vec![0usize; self.num_vertices];
        // (node, signature index within node, color of each class position)
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, root_sig, (1..=s).collect())];
        while let Some((node, sig_idx, colors)) = stack.pop() {
            match (&self.nodes[node], self.sets[node].provenance(sig_idx)) {
                (NodeOp::Leaf { vertex, .. }, Provenance::Leaf) => {
                    vertex_color[*vertex - 1] = colors[0];
                }
                (
                    NodeOp::Union { left, right },
                    Provenance::Union {
                        left: ls,
                        right: rs,
                        left_map,
                        right_map,
                    },
                ) => {
                    let lcolors = left_map.iter().map(|&p| colors[p]).collect();
                    let rcolors = right_map.iter().map(|&p| colors[p]).collect();
                    stack.push((*left, *ls, lcolors));
                    stack.push((*right, *rs, rcolors));
                }
                (
                    NodeOp::EdgeInsert { child, .. } | NodeOp::Relabel { child, .. },
                    Provenance::Unary { child: cs, map },
                ) => {
                    let ccolors = map.iter().map(|&p| colors[p]).collect();
                    stack.push((*child, *cs, ccolors));
                }
                (op, prov) => unreachable!("node {op:?} with provenance {prov:?}"),
            }
        }
        Coloring::new(vertex_color).expect("provenance walk colors every vertex")
    }

    /// Stable text dump of every node's signature set, for golden tests and
    /// diagnostics: nodes in post-order, signatures in canonical order.
    pub fn dump_sigsets(&self) -> String {
        let mut out = String::new();
        for (i, op) in self.nodes.iter().enumerate() {
            match op {
                NodeOp::Leaf { name, label, .. } => {
                    let _ = writeln!(out, "node {}: v({name},{label})", i + 1);
                }
                NodeOp::Union { left, right } => {
                    let _ = writeln!(out, "node {}: union(node {}, node {})", i + 1, left + 1, right + 1);
                }
                NodeOp::EdgeInsert { from, to, child } => {
                    let _ = writeln!(out, "node {}: add({from},{to},node {})", i + 1, child + 1);
                }
                NodeOp::Relabel { from, to, child } => {
                    let _ = writeln!(out, "node {}: rel({from},{to},node {})", i + 1, child + 1);
                }
            }
            for sig in self.sets[i].sigs() {
                let _ = writeln!(out, "  {sig}");
            }
        }
        out
    }
}

/// Computes the dichromatic number of the digraph denoted by `e`, with an
/// optimal coloring (vertex ids in left-to-right leaf order, matching the
/// evaluator).
pub fn solve_dcn(e: &CwExpression, cap: usize) -> Result<(usize, Coloring), DpError> {
    let run = DpRun::new(e, cap)?;
    Ok((run.dichromatic_number(), run.witness()))
}

/// Decides whether the digraph denoted by `e` admits an acyclic coloring
/// with at most `r` colors.
pub fn decide_dcn_r(e: &CwExpression, r: usize, cap: usize) -> Result<bool, DpError> {
    Ok(DpRun::new(e, cap)?.decide(r))
}
