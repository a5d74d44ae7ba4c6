//! The four signature-set transformations, one per expression operation.
//!
//! Class indices referenced by provenance records are positions in the
//! canonical (sorted) class order; all sorting of classes is stable so ties
//! between equal classes resolve by their pre-sort position.

use std::collections::BTreeMap;

use crate::digraph::{Label, ReachSet};

use super::{DpError, Provenance, SigSet, Signature};

/// State of a leaf `a(v)`: one signature with the one class `{(a,a)}`.
pub fn sig_leaf(a: Label, k: Label) -> Result<SigSet, DpError> {
    if a == 0 || a > k {
        return Err(DpError::LabelOutOfRange { label: a, k });
    }
    let sig = Signature::new(vec![ReachSet::from_pairs(vec![(a, a)])]);
    let mut map = BTreeMap::new();
    map.insert(sig, Provenance::Leaf);
    Ok(SigSet::from_map(map))
}

/// Stable-sorts transformed classes and returns (sorted classes, map from
/// old position to new position).
fn canonicalize(classes: Vec<ReachSet>) -> (Vec<ReachSet>, Vec<usize>) {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by(|&i, &j| classes[i].cmp(&classes[j]).then(i.cmp(&j)));
    let mut map = vec![0; classes.len()];
    for (new_pos, &old_pos) in order.iter().enumerate() {
        map[old_pos] = new_pos;
    }
    let mut sorted: Vec<Option<ReachSet>> = classes.into_iter().map(Some).collect();
    let sorted = order
        .iter()
        .map(|&i| sorted[i].take().expect("each index moved once"))
        .collect();
    (sorted, map)
}

/// Disjoint union. Every result signature is obtained by choosing one
/// signature per side and a partial matching between their classes:
/// unmatched classes pass through, matched pairs fuse into their union.
/// Classes of the same side never fuse with each other — inside one side
/// they already describe disjoint acyclic sets, and the union adds no arcs
/// between the sides, so any cross matching stays acyclic.
///
/// Matchings are enumerated per pair of *distinct* class values with
/// multiplicities (a count matrix), not per class position; equal classes
/// are interchangeable, so this prunes the factorial blowup without losing
/// any signature.
pub fn sig_union(fx: &SigSet, fy: &SigSet, cap: usize) -> Result<SigSet, DpError> {
    let mut out: BTreeMap<Signature, Provenance> = BTreeMap::new();
    for (ix, sx) in fx.sigs().iter().enumerate() {
        for (iy, sy) in fy.sigs().iter().enumerate() {
            union_one(sx, sy, ix, iy, &mut out);
            if out.len() > cap {
                return Err(DpError::SignatureCapExceeded { cap });
            }
        }
    }
    Ok(SigSet::from_map(out))
}

/// Run-length view of a canonical class list: (class value, positions).
fn runs(sig: &Signature) -> Vec<(&ReachSet, Vec<usize>)> {
    let mut out: Vec<(&ReachSet, Vec<usize>)> = Vec::new();
    for (pos, c) in sig.classes().iter().enumerate() {
        match out.last_mut() {
            Some((value, positions)) if *value == c => positions.push(pos),
            _ => out.push((c, vec![pos])),
        }
    }
    out
}

fn union_one(
    sx: &Signature,
    sy: &Signature,
    ix: usize,
    iy: usize,
    out: &mut BTreeMap<Signature, Provenance>,
) {
    let lruns = runs(sx);
    let rruns = runs(sy);
    let p = lruns.len();
    let q = rruns.len();
    // DFS over count matrices: count[i][j] = how many copies of left run i
    // fuse with copies of right run j, bounded by the run multiplicities.
    let mut count = vec![vec![0usize; q]; p];
    let mut left_left: Vec<usize> = lruns.iter().map(|(_, ps)| ps.len()).collect();
    let mut right_left: Vec<usize> = rruns.iter().map(|(_, ps)| ps.len()).collect();

    fn dfs(
        cell: usize,
        p: usize,
        q: usize,
        count: &mut Vec<Vec<usize>>,
        left_left: &mut Vec<usize>,
        right_left: &mut Vec<usize>,
        emit: &mut impl FnMut(&Vec<Vec<usize>>),
    ) {
        if cell == p * q {
            emit(count);
            return;
        }
        let (i, j) = (cell / q, cell % q);
        let max = left_left[i].min(right_left[j]);
        for t in 0..=max {
            count[i][j] = t;
            left_left[i] -= t;
            right_left[j] -= t;
            dfs(cell + 1, p, q, count, left_left, right_left, emit);
            left_left[i] += t;
            right_left[j] += t;
            count[i][j] = 0;
        }
    }

    let mut emit = |count: &Vec<Vec<usize>>| {
        // Concrete copy assignment: within left run i, the first copies (in
        // position order) fuse, consumed by right runs in ascending j; the
        // rest pass through. Same on the right. Any other assignment gives
        // the same multiset, so one deterministic choice suffices.
        let mut entries: Vec<(ReachSet, Vec<usize>, Vec<usize>)> = Vec::new();
        let mut right_cursor: Vec<usize> = vec![0; q];
        for (i, (lvalue, lpos)) in lruns.iter().enumerate() {
            let mut used = 0;
            for (j, (rvalue, rpos)) in rruns.iter().enumerate() {
                for _ in 0..count[i][j] {
                    let lp = lpos[used];
                    used += 1;
                    let rp = rpos[right_cursor[j]];
                    right_cursor[j] += 1;
                    entries.push((lvalue.union(rvalue), vec![lp], vec![rp]));
                }
            }
            for &lp in &lpos[used..] {
                entries.push(((*lvalue).clone(), vec![lp], Vec::new()));
            }
        }
        for (j, (rvalue, rpos)) in rruns.iter().enumerate() {
            for &rp in &rpos[right_cursor[j]..] {
                entries.push(((*rvalue).clone(), Vec::new(), vec![rp]));
            }
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut left_map = vec![0usize; sx.num_classes()];
        let mut right_map = vec![0usize; sy.num_classes()];
        let mut classes = Vec::with_capacity(entries.len());
        for (pos, (class, lps, rps)) in entries.into_iter().enumerate() {
            for lp in lps {
                left_map[lp] = pos;
            }
            for rp in rps {
                right_map[rp] = pos;
            }
            classes.push(class);
        }
        let sig = Signature { classes };
        out.entry(sig).or_insert(Provenance::Union {
            left: ix,
            right: iy,
            left_map,
            right_map,
        });
    };
    dfs(0, p, q, &mut count, &mut left_left, &mut right_left, &mut emit);
}

/// Arc insertion from label `a` to label `b`. A class that already reaches
/// from `b` back to `a` would close a cycle through the new arcs, so any
/// signature holding such a class is dropped. In every surviving class the
/// reach relation grows by one simultaneous pass: every way into `a` now
/// continues along every way out of `b`. A single pass is complete — any
/// path through two or more new arcs visits `b ... a` in between, which the
/// dropped-signature rule has excluded.
pub fn sig_edge_insert(f: &SigSet, a: Label, b: Label, cap: usize) -> Result<SigSet, DpError> {
    if a == b {
        return Err(DpError::EqualLabels(a));
    }
    let mut out: BTreeMap<Signature, Provenance> = BTreeMap::new();
    'sig: for (i, sig) in f.sigs().iter().enumerate() {
        for class in sig.classes() {
            if class.contains((b, a)) {
                continue 'sig;
            }
        }
        let transformed: Vec<ReachSet> = sig
            .classes()
            .iter()
            .map(|class| close_class(class, a, b))
            .collect();
        let (classes, map) = canonicalize(transformed);
        out.entry(Signature { classes })
            .or_insert(Provenance::Unary { child: i, map });
        if out.len() > cap {
            return Err(DpError::SignatureCapExceeded { cap });
        }
    }
    Ok(SigSet::from_map(out))
}

fn close_class(class: &ReachSet, a: Label, b: Label) -> ReachSet {
    let mut pairs = class.pairs().to_vec();
    for &(x, s) in class.pairs() {
        if s != a {
            continue;
        }
        for &(t, y) in class.pairs() {
            if t == b {
                pairs.push((x, y));
            }
        }
    }
    let closed = ReachSet::from_pairs(pairs);
    debug_assert!(
        close_class_once_more(&closed, a, b) == closed,
        "single closure pass must reach a fixed point"
    );
    debug_assert!(!closed.contains((b, a)));
    closed
}

#[cfg(debug_assertions)]
fn close_class_once_more(class: &ReachSet, a: Label, b: Label) -> ReachSet {
    let mut pairs = class.pairs().to_vec();
    for &(x, s) in class.pairs() {
        if s == a {
            for &(t, y) in class.pairs() {
                if t == b {
                    pairs.push((x, y));
                }
            }
        }
    }
    ReachSet::from_pairs(pairs)
}

#[cfg(not(debug_assertions))]
fn close_class_once_more(class: &ReachSet, _a: Label, _b: Label) -> ReachSet {
    class.clone()
}

/// Relabeling `a -> b`: pointwise on every pair of every class.
pub fn sig_relabel(f: &SigSet, a: Label, b: Label, cap: usize) -> Result<SigSet, DpError> {
    if a == b {
        return Err(DpError::EqualLabels(a));
    }
    let rho = |l: Label| if l == a { b } else { l };
    let mut out: BTreeMap<Signature, Provenance> = BTreeMap::new();
    for (i, sig) in f.sigs().iter().enumerate() {
        let transformed: Vec<ReachSet> = sig
            .classes()
            .iter()
            .map(|class| {
                ReachSet::from_pairs(
                    class.pairs().iter().map(|&(x, y)| (rho(x), rho(y))).collect(),
                )
            })
            .collect();
        let (classes, map) = canonicalize(transformed);
        out.entry(Signature { classes })
            .or_insert(Provenance::Unary { child: i, map });
        if out.len() > cap {
            return Err(DpError::SignatureCapExceeded { cap });
        }
    }
    Ok(SigSet::from_map(out))
}
