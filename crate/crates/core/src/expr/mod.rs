//! Expression trees denoting digraphs, with parsers, printers, evaluators,
//! and a translation from co-graph expressions to 2-label expressions.
//!
//! Two DSLs are supported:
//!
//! - clique-width expressions (`.cwx`): `v(NAME,LABEL)`, `union(E,E)`,
//!   `add(A,B,E)` inserting all arcs from label-A vertices to label-B
//!   vertices, and `rel(A,B,E)` relabeling A to B;
//! - co-graph expressions (`.dce`): `v(NAME)`, `union(E,E)`, `series(E,E)`
//!   (all arcs both ways between the sides), `order(E,E)` (all arcs
//!   left-to-right), and `dunion(E,E,[a>b,...])` (exactly the listed
//!   left-to-right arcs).
//!
//! Both grammars are whitespace-insensitive and allow `#` line comments.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::digraph::Label;

mod eval;
mod parse;
mod translate;

pub use eval::{eval_cw, eval_dico, EvaluatedCw, EvaluatedDiCo};
pub use parse::{parse_cw, parse_dico};
pub use translate::cograph_to_cw;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("operation requires two distinct labels, got ({0},{0})")]
    EqualLabels(Label),
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertexName(String),
    #[error("label {label} out of range 1..={k}")]
    LabelOutOfRange { label: Label, k: Label },
    #[error("unknown vertex name {0:?}")]
    UnknownVertexName(String),
    #[error("arc {from:?}>{to:?} must go from the left operand to the right operand")]
    DUnionArcWrongDirection { from: String, to: String },
}

/// Node of a clique-width expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CwExpr {
    /// `v(name,a)`: a single new vertex labeled `a`.
    Create { name: String, label: Label },
    /// `union(l,r)`: disjoint union.
    Union { left: Box<CwExpr>, right: Box<CwExpr> },
    /// `add(a,b,e)`: insert every missing arc from each label-`a` vertex to
    /// each label-`b` vertex, `a != b`.
    EdgeInsert { from: Label, to: Label, child: Box<CwExpr> },
    /// `rel(a,b,e)`: rewrite label `a` to `b`, `a != b`.
    Relabel { from: Label, to: Label, child: Box<CwExpr> },
}

impl CwExpr {
    /// Leaf names in left-to-right order — the order in which the evaluator
    /// assigns vertex ids 1, 2, ...
    pub fn leaf_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let CwExpr::Create { name, .. } = e {
                out.push(name.as_str());
            }
        });
        out
    }

    pub fn num_leaves(&self) -> usize {
        match self {
            CwExpr::Create { .. } => 1,
            CwExpr::Union { left, right } => left.num_leaves() + right.num_leaves(),
            CwExpr::EdgeInsert { child, .. } | CwExpr::Relabel { child, .. } => {
                child.num_leaves()
            }
        }
    }

    /// Largest label mentioned anywhere in the tree.
    pub fn max_label(&self) -> Label {
        let mut max = 0;
        self.walk(&mut |e| {
            let m = match e {
                CwExpr::Create { label, .. } => *label,
                CwExpr::EdgeInsert { from, to, .. } | CwExpr::Relabel { from, to, .. } => {
                    (*from).max(*to)
                }
                CwExpr::Union { .. } => 0,
            };
            max = max.max(m);
        });
        max
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a CwExpr)) {
        f(self);
        match self {
            CwExpr::Create { .. } => {}
            CwExpr::Union { left, right } => {
                left.walk(f);
                right.walk(f);
            }
            CwExpr::EdgeInsert { child, .. } | CwExpr::Relabel { child, .. } => child.walk(f),
        }
    }
}

impl fmt::Display for CwExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwExpr::Create { name, label } => write!(f, "v({name},{label})"),
            CwExpr::Union { left, right } => write!(f, "union({left},{right})"),
            CwExpr::EdgeInsert { from, to, child } => write!(f, "add({from},{to},{child})"),
            CwExpr::Relabel { from, to, child } => write!(f, "rel({from},{to},{child})"),
        }
    }
}

/// A validated clique-width expression together with its label-alphabet
/// size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwExpression {
    k: Label,
    root: CwExpr,
}

impl CwExpression {
    /// Validates labels against `k`, distinctness of operation label pairs,
    /// and uniqueness of vertex names.
    pub fn new(k: Label, root: CwExpr) -> Result<Self, ExprError> {
        let mut err = None;
        let mut names = BTreeSet::new();
        root.walk(&mut |e| {
            if err.is_some() {
                return;
            }
            let check = |l: Label| {
                if l == 0 || l > k {
                    Some(ExprError::LabelOutOfRange { label: l, k })
                } else {
                    None
                }
            };
            err = match e {
                CwExpr::Create { name, label } => {
                    if !names.insert(name.clone()) {
                        Some(ExprError::DuplicateVertexName(name.clone()))
                    } else {
                        check(*label)
                    }
                }
                CwExpr::EdgeInsert { from, to, .. } | CwExpr::Relabel { from, to, .. } => {
                    if from == to {
                        Some(ExprError::EqualLabels(*from))
                    } else {
                        check(*from).or_else(|| check(*to))
                    }
                }
                CwExpr::Union { .. } => None,
            };
        });
        match err {
            Some(e) => Err(e),
            None => Ok(CwExpression { k, root }),
        }
    }

    /// Like [`CwExpression::new`] with `k` inferred as the maximum label
    /// mentioned in the tree.
    pub fn infer(root: CwExpr) -> Result<Self, ExprError> {
        let k = root.max_label();
        CwExpression::new(k, root)
    }

    pub fn k(&self) -> Label {
        self.k
    }

    pub fn root(&self) -> &CwExpr {
        &self.root
    }

    /// Canonical text form; parses back to an equal expression.
    pub fn to_text(&self) -> String {
        format!("k={}\n{}\n", self.k, self.root)
    }
}

/// Node of a co-graph expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiCoExpr {
    Vertex { name: String },
    Union { left: Box<DiCoExpr>, right: Box<DiCoExpr> },
    Series { left: Box<DiCoExpr>, right: Box<DiCoExpr> },
    Order { left: Box<DiCoExpr>, right: Box<DiCoExpr> },
    /// Disjoint union plus exactly the listed left-to-right arcs.
    DUnion {
        left: Box<DiCoExpr>,
        right: Box<DiCoExpr>,
        arcs: Vec<(String, String)>,
    },
}

impl DiCoExpr {
    pub fn leaf_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            DiCoExpr::Vertex { name } => out.push(name),
            DiCoExpr::Union { left, right }
            | DiCoExpr::Series { left, right }
            | DiCoExpr::Order { left, right }
            | DiCoExpr::DUnion { left, right, .. } => {
                left.collect_names(out);
                right.collect_names(out);
            }
        }
    }

    pub fn num_leaves(&self) -> usize {
        match self {
            DiCoExpr::Vertex { .. } => 1,
            DiCoExpr::Union { left, right }
            | DiCoExpr::Series { left, right }
            | DiCoExpr::Order { left, right }
            | DiCoExpr::DUnion { left, right, .. } => left.num_leaves() + right.num_leaves(),
        }
    }

    pub fn has_dunion(&self) -> bool {
        match self {
            DiCoExpr::Vertex { .. } => false,
            DiCoExpr::Union { left, right }
            | DiCoExpr::Series { left, right }
            | DiCoExpr::Order { left, right } => left.has_dunion() || right.has_dunion(),
            DiCoExpr::DUnion { .. } => true,
        }
    }

    fn validate(&self) -> Result<(), ExprError> {
        let all = self.leaf_names();
        let mut seen = BTreeSet::new();
        for name in &all {
            if !seen.insert(*name) {
                return Err(ExprError::DuplicateVertexName(name.to_string()));
            }
        }
        self.validate_dunions(&seen)
    }

    fn validate_dunions(&self, global: &BTreeSet<&str>) -> Result<(), ExprError> {
        match self {
            DiCoExpr::Vertex { .. } => Ok(()),
            DiCoExpr::Union { left, right }
            | DiCoExpr::Series { left, right }
            | DiCoExpr::Order { left, right } => {
                left.validate_dunions(global)?;
                right.validate_dunions(global)
            }
            DiCoExpr::DUnion { left, right, arcs } => {
                left.validate_dunions(global)?;
                right.validate_dunions(global)?;
                let lnames: BTreeSet<&str> = left.leaf_names().into_iter().collect();
                let rnames: BTreeSet<&str> = right.leaf_names().into_iter().collect();
                for (from, to) in arcs {
                    if !global.contains(from.as_str()) {
                        return Err(ExprError::UnknownVertexName(from.clone()));
                    }
                    if !global.contains(to.as_str()) {
                        return Err(ExprError::UnknownVertexName(to.clone()));
                    }
                    if !lnames.contains(from.as_str()) || !rnames.contains(to.as_str()) {
                        return Err(ExprError::DUnionArcWrongDirection {
                            from: from.clone(),
                            to: to.clone(),
                        });
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for DiCoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiCoExpr::Vertex { name } => write!(f, "v({name})"),
            DiCoExpr::Union { left, right } => write!(f, "union({left},{right})"),
            DiCoExpr::Series { left, right } => write!(f, "series({left},{right})"),
            DiCoExpr::Order { left, right } => write!(f, "order({left},{right})"),
            DiCoExpr::DUnion { left, right, arcs } => {
                write!(f, "dunion({left},{right},[")?;
                for (i, (a, b)) in arcs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}>{b}")?;
                }
                write!(f, "])")
            }
        }
    }
}

/// A validated co-graph expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiCoExpression {
    root: DiCoExpr,
}

impl DiCoExpression {
    pub fn new(root: DiCoExpr) -> Result<Self, ExprError> {
        root.validate()?;
        Ok(DiCoExpression { root })
    }

    pub fn root(&self) -> &DiCoExpr {
        &self.root
    }

    /// Canonical text form; parses back to an equal expression.
    pub fn to_text(&self) -> String {
        format!("{}\n", self.root)
    }
}
