//! Dynamic programming over clique-width expressions.
//!
//! For an expression node whose evaluated labeled digraph is `G`, the state
//! is the set of *signatures*: for every partition of `V(G)` into acyclic
//! classes `V_1, ..., V_s`, the multiset of per-class label-reachability
//! sets. Distinct partitions often share a signature, and the four
//! expression operations act on signatures without reference to the
//! underlying partitions, which keeps the state space bounded in terms of
//! the label count alone (for fixed label count, polynomially in the vertex
//! count). The dichromatic number is the least class count among the root's
//! signatures.
//!
//! Each signature carries a provenance record so one optimal partition can
//! be rebuilt top-down as a concrete coloring.

use std::fmt;

use thiserror::Error;

use crate::digraph::{reach_pairs, Label, LabeledDigraph, ReachSet};

mod ops;
mod solve;

pub use ops::{sig_edge_insert, sig_leaf, sig_relabel, sig_union};
pub use solve::{decide_dcn_r, postorder, solve_dcn, DpRun, NodeOp};

/// Hard cap on signatures per expression node; exceeding it aborts with
/// [`DpError::SignatureCapExceeded`] instead of thrashing. The structural
/// bound on signature counts makes this a safety valve, not a correctness
/// device.
pub const DEFAULT_SIG_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DpError {
    #[error("signature set exceeded the cap of {cap} entries at an expression node")]
    SignatureCapExceeded { cap: usize },
    #[error("operation requires two distinct labels, got ({0},{0})")]
    EqualLabels(Label),
    #[error("label {label} out of range 1..={k}")]
    LabelOutOfRange { label: Label, k: Label },
}

/// The canonical multiset of per-class reach sets of one acyclic partition:
/// classes sorted by (size, lexicographic pair order). Two partitions are
/// interchangeable for the rest of the computation iff their signatures are
/// equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    classes: Vec<ReachSet>,
}

impl Signature {
    pub fn new(mut classes: Vec<ReachSet>) -> Self {
        debug_assert!(classes.iter().all(|c| !c.is_empty()));
        classes.sort();
        Signature { classes }
    }

    /// Signature of a concrete acyclic partition of the vertices of `g`.
    pub fn of_partition(g: &LabeledDigraph, parts: &[Vec<usize>]) -> Self {
        Signature::new(parts.iter().map(|p| reach_pairs(g, p)).collect())
    }

    pub fn classes(&self) -> &[ReachSet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

// Signatures with fewer classes first, then lexicographic — so the first
// signature of a sorted set realizes the minimum class count.
impl Ord for Signature {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.classes.len(), &self.classes).cmp(&(other.classes.len(), &other.classes))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ">")
    }
}

/// How a signature arose, in terms of the signatures of the node's children.
/// Class indices are positions in the canonical class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Leaf node: the single class holds the single vertex.
    Leaf,
    /// Disjoint union: `left`/`right` index the child signatures inside the
    /// child sets; `left_map[i]` is the position in this signature of the
    /// class that the left child's class `i` was carried or merged into
    /// (same for `right_map`).
    Union {
        left: usize,
        right: usize,
        left_map: Vec<usize>,
        right_map: Vec<usize>,
    },
    /// Edge insertion or relabeling: `map[i]` is the position the child's
    /// class `i` moved to after transformation and re-canonicalization.
    Unary { child: usize, map: Vec<usize> },
}

/// A set of signatures in canonical order, each with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigSet {
    sigs: Vec<Signature>,
    prov: Vec<Provenance>,
}

impl SigSet {
    pub(crate) fn from_map(map: std::collections::BTreeMap<Signature, Provenance>) -> Self {
        let (sigs, prov) = map.into_iter().unzip();
        SigSet { sigs, prov }
    }

    pub fn sigs(&self) -> &[Signature] {
        &self.sigs
    }

    pub fn len(&self) -> usize {
        self.sigs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigs.is_empty()
    }

    pub fn provenance(&self, i: usize) -> &Provenance {
        &self.prov[i]
    }

    /// Least class count over the set, or `None` when empty.
    pub fn min_classes(&self) -> Option<usize> {
        self.sigs.first().map(|s| s.num_classes())
    }

    pub fn contains(&self, sig: &Signature) -> bool {
        self.sigs.binary_search(sig).is_ok()
    }
}
