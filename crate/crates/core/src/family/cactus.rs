//! Directed cactus forests: recognition, cycle decomposition, and 2-coloring.
//!
//! A directed cactus forest is a digraph in which any two directed cycles
//! share at most one vertex. Its dichromatic number is at most 2: cycles
//! attach to each other tree-like, so they can be broken one at a time.
//!
//! Recognition works by decomposition. Inside every strongly connected
//! component, simple cycles are peeled off by depth-first search and their
//! arcs removed; in a cactus the cycles are arc-disjoint, so peeling
//! recovers exactly them and consumes every intra-component arc. The result
//! is then validated three ways:
//!
//! 1. peeling must not get stuck (a reachable-from-nowhere arc fragment
//!    inside a component means some arc lies on no extractable cycle);
//! 2. extracted cycles must pairwise share at most one vertex;
//! 3. the incidence structure between cycles and their vertices must be
//!    acyclic. Without this check a "ring" of three cycles, pairwise
//!    sharing one vertex each, would slip through — but such a ring always
//!    contains a composite directed cycle running through half of each
//!    ring member, which shares two vertices with it.
//!
//! Together the three checks are exact: when they pass, every simple cycle
//! of the graph is one of the extracted ones.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::{
    check_acyclic_coloring, is_acyclic, rotate_min_first, scc_decompose, Coloring,
    ColoringVerdict, Digraph,
};
use crate::oracle::brute_force_dcn;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotACactus {
    #[error("cycles {c1:?} and {c2:?} share vertices {shared:?}")]
    SharedVertices {
        c1: Vec<usize>,
        c2: Vec<usize>,
        shared: Vec<usize>,
    },
    #[error("arcs {0:?} lie inside a strongly connected component but on no extractable cycle")]
    LeftoverArcs(Vec<(usize, usize)>),
    #[error("cycles interlock in a ring around vertices {0:?}")]
    EntangledCycles(Vec<usize>),
}

/// Node of the auxiliary processing DAG: one per extracted cycle, one per
/// vertex lying on no cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DagNode {
    /// Index into `cycles`.
    Cycle(usize),
    /// Vertex id.
    Single(usize),
}

/// Arc-disjoint cycle decomposition of a directed cactus forest, with the
/// auxiliary DAG guiding the coloring traversal.
#[derive(Debug, Clone)]
pub struct CycleDecomposition {
    /// Simple directed cycles, minimum vertex first, ordered by sorted
    /// vertex list; together they carry every intra-component arc exactly
    /// once.
    pub cycles: Vec<Vec<usize>>,
    pub dag_nodes: Vec<DagNode>,
    /// Arcs between node indices: cycles sharing a vertex are ordered by
    /// their position in `cycles` (any fixed total order keeps the DAG
    /// acyclic); all other adjacencies follow the graph's arcs, which cross
    /// component boundaries only.
    pub dag_arcs: Vec<(usize, usize)>,
    /// Topological order of `dag_nodes`, smallest index first among ready
    /// nodes.
    pub topo_order: Vec<usize>,
}

/// Peels arc-disjoint cycles inside every strongly connected component and
/// validates the cactus property.
pub fn cactus_decompose(g: &Digraph) -> Result<CycleDecomposition, NotACactus> {
    let scc = scc_decompose(g);

    // Intra-component arcs, peeled as cycles get extracted.
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for comp in &scc.components {
        if comp.len() < 2 {
            continue;
        }
        extract_component_cycles(g, comp, &scc.comp_of, &mut cycles)?;
    }
    cycles.sort_by_key(|c| {
        let mut key = c.clone();
        key.sort_unstable();
        key
    });

    // Pairwise overlap check, with the offending pair as witness.
    let sorted: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s
        })
        .collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared: Vec<usize> = sorted[i]
                .iter()
                .copied()
                .filter(|v| sorted[j].binary_search(v).is_ok())
                .collect();
            if shared.len() > 1 {
                return Err(NotACactus::SharedVertices {
                    c1: cycles[i].clone(),
                    c2: cycles[j].clone(),
                    shared,
                });
            }
        }
    }

    // Cycle-vertex incidence must be a forest: a ring of cycles, each
    // sharing one vertex with the next, hides a composite directed cycle.
    let n = g.n();
    let t = cycles.len();
    let mut dsu = Dsu::new(t + n + 1);
    for (ci, members) in sorted.iter().enumerate() {
        for &v in members {
            if !dsu.union(ci, t + v) {
                let comp = scc.comp_of[v];
                return Err(NotACactus::EntangledCycles(
                    scc.components[comp].clone(),
                ));
            }
        }
    }

    Ok(build_dag(g, cycles, sorted))
}

/// Repeatedly finds a cycle among the remaining intra-component arcs and
/// removes its arcs, until none remain or no cycle is reachable from the
/// least vertex that still has an outgoing arc (then those outgoing arcs
/// can never be covered — removing other arcs only shrinks the graph).
fn extract_component_cycles(
    g: &Digraph,
    comp: &[usize],
    comp_of: &[usize],
    cycles: &mut Vec<Vec<usize>>,
) -> Result<(), NotACactus> {
    let cid = comp_of[comp[0]];
    let mut rem: BTreeSet<(usize, usize)> = g
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| comp_of[u] == cid && comp_of[v] == cid)
        .collect();
    while let Some(&(start, _)) = rem.iter().next() {
        match find_cycle_from(start, &rem) {
            Some(mut cycle) => {
                for i in 0..cycle.len() {
                    let removed = rem.remove(&(cycle[i], cycle[(i + 1) % cycle.len()]));
                    debug_assert!(removed);
                }
                rotate_min_first(&mut cycle);
                cycles.push(cycle);
            }
            None => {
                let stuck: Vec<(usize, usize)> = rem
                    .iter()
                    .copied()
                    .take_while(|&(u, _)| u == start)
                    .collect();
                return Err(NotACactus::LeftoverArcs(stuck));
            }
        }
    }
    Ok(())
}

/// DFS over the arc set `rem` from `start`; returns the vertex sequence of
/// the first cycle closed by an arc back onto the current path.
fn find_cycle_from(start: usize, rem: &BTreeSet<(usize, usize)>) -> Option<Vec<usize>> {
    let succ = |v: usize| {
        rem.range((v, 0)..(v + 1, 0))
            .map(|&(_, w)| w)
            .collect::<Vec<usize>>()
    };
    let mut on_path: BTreeSet<usize> = BTreeSet::new();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    let mut path: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(start, succ(start), 0)];
    on_path.insert(start);
    path.push(start);
    while let Some(&mut (v, ref nexts, ref mut i)) = stack.last_mut() {
        if let Some(&w) = nexts.get(*i) {
            *i += 1;
            if on_path.contains(&w) {
                let pos = path.iter().position(|&x| x == w).expect("on path");
                return Some(path[pos..].to_vec());
            }
            if !done.contains(&w) {
                on_path.insert(w);
                path.push(w);
                stack.push((w, succ(w), 0));
            }
        } else {
            done.insert(v);
            on_path.remove(&v);
            path.pop();
            stack.pop();
        }
    }
    None
}

fn build_dag(g: &Digraph, cycles: Vec<Vec<usize>>, sorted: Vec<Vec<usize>>) -> CycleDecomposition {
    let n = g.n();
    let t = cycles.len();
    // Every vertex maps to its least containing cycle node, or to its own
    // single node.
    let mut cycles_of_vertex: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (ci, members) in sorted.iter().enumerate() {
        for &v in members {
            cycles_of_vertex[v].push(ci);
        }
    }
    let mut dag_nodes: Vec<DagNode> = (0..t).map(DagNode::Cycle).collect();
    let mut node_of_vertex: Vec<usize> = vec![usize::MAX; n + 1];
    for v in 1..=n {
        node_of_vertex[v] = match cycles_of_vertex[v].first() {
            Some(&ci) => ci,
            None => {
                dag_nodes.push(DagNode::Single(v));
                dag_nodes.len() - 1
            }
        };
    }

    let mut dag_arcs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for cs in &cycles_of_vertex {
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                dag_arcs.insert((cs[i], cs[j]));
            }
        }
    }
    let extracted: BTreeSet<(usize, usize)> = cycles
        .iter()
        .flat_map(|c| {
            (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()]))
        })
        .collect();
    for &(u, v) in g.arcs() {
        if !extracted.contains(&(u, v)) {
            let (nu, nv) = (node_of_vertex[u], node_of_vertex[v]);
            debug_assert_ne!(nu, nv, "uncovered arc inside one node");
            dag_arcs.insert((nu, nv));
        }
    }

    // Kahn's algorithm, smallest ready node first.
    let mut indeg = vec![0usize; dag_nodes.len()];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); dag_nodes.len()];
    for &(a, b) in &dag_arcs {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut ready: BTreeSet<usize> = (0..dag_nodes.len()).filter(|&i| indeg[i] == 0).collect();
    let mut topo_order = Vec::with_capacity(dag_nodes.len());
    while let Some(&node) = ready.iter().next() {
        ready.remove(&node);
        topo_order.push(node);
        for &next in &out[node] {
            indeg[next] -= 1;
            if indeg[next] == 0 {
                ready.insert(next);
            }
        }
    }
    assert_eq!(
        topo_order.len(),
        dag_nodes.len(),
        "processing order exists for every validated decomposition"
    );

    CycleDecomposition {
        cycles,
        dag_nodes,
        dag_arcs: dag_arcs.into_iter().collect(),
        topo_order,
    }
}

/// Optimal acyclic coloring of a directed cactus forest: 1 color for DAGs,
/// otherwise 2.
///
/// Cycles are processed along the decomposition's topological order; each
/// gets at least one vertex of either color. With at most one pre-colored
/// vertex per cycle (the regular case) the local rules below always
/// succeed; cycles pre-colored constant by several predecessors are
/// repaired by flipping a vertex that no processed cycle depends on, and as
/// a last resort the enclosing strongly connected component is re-colored
/// by brute force (components stay small exactly when flips fail — they are
/// densely interlocked 2-cycles).
pub fn cactus_color(g: &Digraph) -> Result<(usize, Coloring), NotACactus> {
    let decomposition = cactus_decompose(g)?;
    if is_acyclic(g) {
        let coloring = Coloring::new(vec![1; g.n()]).expect("nonempty monochrome");
        return Ok((1, coloring));
    }

    let mut color = vec![0usize; g.n() + 1];
    // processed_at[v] = indices of already-colored cycles containing v
    let mut processed: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for &node in &decomposition.topo_order {
        match decomposition.dag_nodes[node] {
            DagNode::Single(v) => color[v] = 2,
            DagNode::Cycle(ci) => {
                color_cycle(&decomposition.cycles, ci, &mut color, &processed);
                for &v in &decomposition.cycles[ci] {
                    processed[v].push(ci);
                }
            }
        }
    }

    // Defensive repair: if some component still holds a monochromatic
    // cycle, re-color that component exactly. Each pass fixes one component
    // for good, so this terminates.
    let scc = scc_decompose(g);
    let mut coloring = Coloring::new(color[1..].to_vec()).expect("all vertices colored");
    loop {
        match check_acyclic_coloring(g, &coloring).expect("sizes match") {
            ColoringVerdict::Valid => break,
            ColoringVerdict::Invalid { cycle, .. } => {
                let comp = &scc.components[scc.comp_of[cycle[0]]];
                let (sub, old_ids) = g.induced(comp);
                let (_, sub_coloring) =
                    brute_force_dcn(&sub, Some(2)).expect("cactus components are 2-colorable");
                let mut colors = coloring.per_vertex().to_vec();
                for (new_id, &old_id) in old_ids.iter().enumerate() {
                    colors[old_id - 1] = sub_coloring.color(new_id + 1);
                }
                coloring = Coloring::new(colors).expect("still a total 1/2 coloring");
            }
        }
    }
    Ok((2, coloring))
}

/// Union-find over cycle nodes and vertex nodes; a union of two already
/// connected nodes exposes a ring in the incidence structure.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn color_cycle(
    cycles: &[Vec<usize>],
    ci: usize,
    color: &mut [usize],
    processed: &[Vec<usize>],
) {
    let members = &cycles[ci];
    let ones = members.iter().filter(|&&v| color[v] == 1).count();
    let twos = members.iter().filter(|&&v| color[v] == 2).count();
    let uncolored = members.len() - ones - twos;

    if ones >= 1 && (twos >= 1 || uncolored >= 1) {
        for &v in members {
            if color[v] == 0 {
                color[v] = 2;
            }
        }
    } else if ones == 0 && uncolored >= 1 {
        let first = *members
            .iter()
            .filter(|&&v| color[v] == 0)
            .min()
            .expect("an uncolored vertex exists");
        for &v in members {
            if color[v] == 0 {
                color[v] = if v == first { 1 } else { 2 };
            }
        }
    } else {
        // Fully pre-colored and constant. Flip one vertex whose processed
        // cycles all stay non-constant; if none exists, leave the cycle for
        // the component repair pass.
        let mut flip_candidates: Vec<usize> = members.clone();
        flip_candidates.sort_unstable();
        for v in flip_candidates {
            let flipped = 3 - color[v];
            let safe = processed[v].iter().all(|&pi| {
                cycles[pi]
                    .iter()
                    .any(|&u| (if u == v { flipped } else { color[u] }) != flipped)
            });
            if safe {
                color[v] = flipped;
                return;
            }
        }
    }
}
