//! Evaluation of expression trees into concrete digraphs. Vertex ids are
//! assigned 1, 2, ... in left-to-right leaf order, so each subtree owns a
//! contiguous id range.

use std::collections::{BTreeMap, BTreeSet};

use crate::digraph::{Digraph, Label, LabeledDigraph};

use super::{CwExpr, CwExpression, DiCoExpr, DiCoExpression};

/// An evaluated clique-width expression: the labeled digraph plus the leaf
/// name of each vertex (`names[i]` belongs to vertex `i + 1`).
#[derive(Debug, Clone)]
pub struct EvaluatedCw {
    pub graph: LabeledDigraph,
    pub names: Vec<String>,
}

/// An evaluated co-graph expression.
#[derive(Debug, Clone)]
pub struct EvaluatedDiCo {
    pub graph: Digraph,
    pub names: Vec<String>,
}

struct CwState {
    labels: Vec<Label>,
    names: Vec<String>,
    arcs: BTreeSet<(usize, usize)>,
}

pub fn eval_cw(e: &CwExpression) -> EvaluatedCw {
    let mut st = CwState {
        labels: Vec::new(),
        names: Vec::new(),
        arcs: BTreeSet::new(),
    };
    eval_cw_node(e.root(), &mut st);
    let n = st.labels.len();
    let arcs: Vec<(usize, usize)> = st.arcs.into_iter().collect();
    let graph = Digraph::new(n, &arcs).expect("evaluator emits valid arcs");
    let graph =
        LabeledDigraph::new(graph, e.k(), st.labels).expect("evaluator emits valid labels");
    EvaluatedCw {
        graph,
        names: st.names,
    }
}

/// Returns the subtree's vertex id range as (lo, hi) inclusive, 1-based.
fn eval_cw_node(e: &CwExpr, st: &mut CwState) -> (usize, usize) {
    match e {
        CwExpr::Create { name, label } => {
            st.labels.push(*label);
            st.names.push(name.clone());
            let id = st.labels.len();
            (id, id)
        }
        CwExpr::Union { left, right } => {
            let (lo, _) = eval_cw_node(left, st);
            let (_, hi) = eval_cw_node(right, st);
            (lo, hi)
        }
        CwExpr::EdgeInsert { from, to, child } => {
            let (lo, hi) = eval_cw_node(child, st);
            let sources: Vec<usize> =
                (lo..=hi).filter(|&v| st.labels[v - 1] == *from).collect();
            let targets: Vec<usize> = (lo..=hi).filter(|&v| st.labels[v - 1] == *to).collect();
            for &u in &sources {
                for &v in &targets {
                    st.arcs.insert((u, v));
                }
            }
            (lo, hi)
        }
        CwExpr::Relabel { from, to, child } => {
            let (lo, hi) = eval_cw_node(child, st);
            for v in lo..=hi {
                if st.labels[v - 1] == *from {
                    st.labels[v - 1] = *to;
                }
            }
            (lo, hi)
        }
    }
}

struct DiCoState {
    names: Vec<String>,
    id_of: BTreeMap<String, usize>,
    arcs: BTreeSet<(usize, usize)>,
}

pub fn eval_dico(e: &DiCoExpression) -> EvaluatedDiCo {
    let mut st = DiCoState {
        names: Vec::new(),
        id_of: BTreeMap::new(),
        arcs: BTreeSet::new(),
    };
    eval_dico_node(e.root(), &mut st);
    let n = st.names.len();
    let arcs: Vec<(usize, usize)> = st.arcs.into_iter().collect();
    let graph = Digraph::new(n, &arcs).expect("evaluator emits valid arcs");
    EvaluatedDiCo {
        graph,
        names: st.names,
    }
}

fn eval_dico_node(e: &DiCoExpr, st: &mut DiCoState) -> (usize, usize) {
    match e {
        DiCoExpr::Vertex { name } => {
            st.names.push(name.clone());
            let id = st.names.len();
            st.id_of.insert(name.clone(), id);
            (id, id)
        }
        DiCoExpr::Union { left, right } => {
            let (lo, _) = eval_dico_node(left, st);
            let (_, hi) = eval_dico_node(right, st);
            (lo, hi)
        }
        DiCoExpr::Series { left, right } => {
            let (llo, lhi) = eval_dico_node(left, st);
            let (rlo, rhi) = eval_dico_node(right, st);
            for u in llo..=lhi {
                for v in rlo..=rhi {
                    st.arcs.insert((u, v));
                    st.arcs.insert((v, u));
                }
            }
            (llo, rhi)
        }
        DiCoExpr::Order { left, right } => {
            let (llo, lhi) = eval_dico_node(left, st);
            let (rlo, rhi) = eval_dico_node(right, st);
            for u in llo..=lhi {
                for v in rlo..=rhi {
                    st.arcs.insert((u, v));
                }
            }
            (llo, rhi)
        }
        DiCoExpr::DUnion { left, right, arcs } => {
            let (llo, _) = eval_dico_node(left, st);
            let (_, rhi) = eval_dico_node(right, st);
            for (from, to) in arcs {
                let u = st.id_of[from];
                let v = st.id_of[to];
                st.arcs.insert((u, v));
            }
            (llo, rhi)
        }
    }
}
