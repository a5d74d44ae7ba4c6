//! Mechanical translation of co-graph expressions (without directed-union
//! nodes) into 2-label clique-width expressions over the same vertex names.
//!
//! The construction keeps one invariant: after translating any subtree,
//! every vertex of that subtree carries label 1. A binary composition then
//! relabels the right side to 2, inserts the required arcs between the label
//! classes, and restores label 1 everywhere.

use super::{CwExpr, CwExpression, DiCoExpr, DiCoExpression};

/// Returns `None` when the expression contains a directed-union node — its
/// arbitrary arc subsets are not expressible with two labels under this
/// scheme.
pub fn cograph_to_cw(e: &DiCoExpression) -> Option<CwExpression> {
    let root = translate(e.root())?;
    Some(CwExpression::new(2, root).expect("translation preserves well-formedness"))
}

fn translate(e: &DiCoExpr) -> Option<CwExpr> {
    let node = match e {
        DiCoExpr::Vertex { name } => CwExpr::Create {
            name: name.clone(),
            label: 1,
        },
        DiCoExpr::Union { left, right } => CwExpr::Union {
            left: Box::new(translate(left)?),
            right: Box::new(translate(right)?),
        },
        DiCoExpr::Order { left, right } | DiCoExpr::Series { left, right } => {
            let joined = CwExpr::Union {
                left: Box::new(translate(left)?),
                right: Box::new(CwExpr::Relabel {
                    from: 1,
                    to: 2,
                    child: Box::new(translate(right)?),
                }),
            };
            let forward = CwExpr::EdgeInsert {
                from: 1,
                to: 2,
                child: Box::new(joined),
            };
            let arcs_added = if matches!(e, DiCoExpr::Series { .. }) {
                CwExpr::EdgeInsert {
                    from: 2,
                    to: 1,
                    child: Box::new(forward),
                }
            } else {
                forward
            };
            CwExpr::Relabel {
                from: 2,
                to: 1,
                child: Box::new(arcs_added),
            }
        }
        DiCoExpr::DUnion { .. } => return None,
    };
    Some(node)
}
