//! Digraphs, labelings, colorings, and the structural predicates the solvers
//! are built on: acyclicity with witnesses, strongly connected components,
//! symmetric parts, and label-pair reachability.
//!
//! Vertices are dense 1-based integers `1..=n`. All types are immutable after
//! construction and all functions are pure.

use std::collections::BTreeSet;

use thiserror::Error;

/// Vertex label in a clique-width expression, 1-based.
pub type Label = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {0} has no color assigned")]
    PartialColoring(usize),
    #[error("color {color} of vertex {vertex} is not in 1..={num_colors}, or some color in that range is unused")]
    BadColorRange {
        vertex: usize,
        color: usize,
        num_colors: usize,
    },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSizeMismatch { got: usize, expected: usize },
    #[error("label {label} out of range 1..={k}")]
    LabelOutOfRange { label: Label, k: Label },
}

/// A finite simple directed graph: vertices `1..=n`, arcs are ordered pairs
/// of distinct vertices, stored as a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>, // sorted lexicographically, no duplicates
    out_adj: Vec<Vec<usize>>,  // index 0 unused
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices from an arc list. Rejects self-loops,
    /// duplicate arcs, and endpoints outside `1..=n`.
    pub fn new(n: usize, arc_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(arc_list.len());
        for &(u, v) in arc_list {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            arcs.push((u, v));
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc(w[0].0, w[0].1));
        }
        let mut out_adj = vec![Vec::new(); n + 1];
        let mut in_adj = vec![Vec::new(); n + 1];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Induced subdigraph on `keep`, with vertices renumbered `1..=keep.len()`
    /// in ascending order of their old ids. Returns the new graph and the
    /// old id of each new vertex.
    pub fn induced(&self, keep: &[usize]) -> (Digraph, Vec<usize>) {
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_of = vec![0usize; self.n + 1];
        for (i, &v) in old_ids.iter().enumerate() {
            new_of[v] = i + 1;
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(u, v)| new_of[u] != 0 && new_of[v] != 0)
            .map(|&(u, v)| (new_of[u], new_of[v]))
            .collect();
        (
            Digraph::new(old_ids.len(), &arcs).expect("induced subgraph of a valid digraph"),
            old_ids,
        )
    }
}

/// Outcome of an acyclicity test, with a verifying witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    /// A topological ordering of all vertices.
    Acyclic { topo: Vec<usize> },
    /// A simple directed cycle, rotated so its minimum vertex comes first.
    Cyclic { cycle: Vec<usize> },
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic { .. })
    }
}

/// Rotates a cycle's vertex sequence so the smallest vertex comes first.
pub(crate) fn rotate_min_first(cycle: &mut [usize]) {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
}

/// Tests acyclicity of the subdigraph induced by the vertices with
/// `in_set[v] == true`. `in_set` is indexed 1-based.
pub fn acyclicity_of_subset(g: &Digraph, in_set: &[bool]) -> Acyclicity {
    // Iterative DFS, coloring vertices white/gray/black; a gray target closes
    // a simple cycle along the current path.
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let n = g.n();
    let mut state = vec![WHITE; n + 1];
    let mut topo_rev: Vec<usize> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    // (vertex, next out-neighbor index)
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for start in 1..=n {
        if !in_set[start] || state[start] != WHITE {
            continue;
        }
        state[start] = GRAY;
        path.push(start);
        stack.push((start, 0));
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.out_adj[v].get(*idx) {
                *idx += 1;
                if !in_set[w] {
                    continue;
                }
                match state[w] {
                    WHITE => {
                        state[w] = GRAY;
                        path.push(w);
                        stack.push((w, 0));
                    }
                    GRAY => {
                        let pos = path.iter().position(|&x| x == w).expect("gray on path");
                        let mut cycle = path[pos..].to_vec();
                        rotate_min_first(&mut cycle);
                        return Acyclicity::Cyclic { cycle };
                    }
                    _ => {}
                }
            } else {
                state[v] = BLACK;
                topo_rev.push(v);
                path.pop();
                stack.pop();
            }
        }
    }
    topo_rev.reverse();
    Acyclicity::Acyclic { topo: topo_rev }
}

/// Tests whether `g` contains a directed cycle; returns a topological
/// ordering when acyclic and a simple cycle otherwise.
pub fn acyclicity(g: &Digraph) -> Acyclicity {
    acyclicity_of_subset(g, &vec![true; g.n() + 1])
}

pub fn is_acyclic(g: &Digraph) -> bool {
    acyclicity(g).is_acyclic()
}

/// Strongly connected components in reverse-topological order of the
/// condensation; vertices within each component are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    pub components: Vec<Vec<usize>>,
    /// Component index of each vertex (entry 0 unused).
    pub comp_of: Vec<usize>,
}

/// Tarjan's algorithm, iterative. Components are emitted sinks-first, which
/// is reverse-topological order of the condensation.
pub fn scc_decompose(g: &Digraph) -> SccDecomposition {
    let n = g.n();
    let mut index = vec![usize::MAX; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut on_stack = vec![false; n + 1];
    let mut tarjan_stack: Vec<usize> = Vec::new();
    let mut comp_of = vec![usize::MAX; n + 1];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0usize;

    let mut call: Vec<(usize, usize)> = Vec::new();
    for start in 1..=n {
        if index[start] != usize::MAX {
            continue;
        }
        call.push((start, 0));
        index[start] = counter;
        low[start] = counter;
        counter += 1;
        tarjan_stack.push(start);
        on_stack[start] = true;

        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if let Some(&w) = g.out_adj[v].get(*i) {
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    tarjan_stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = tarjan_stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp_of[w] = components.len();
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    SccDecomposition {
        components,
        comp_of,
    }
}

/// The spanning subdigraph keeping exactly the symmetric arcs of `g`.
pub fn symmetric_part(g: &Digraph) -> Digraph {
    let arcs: Vec<(usize, usize)> = g
        .arcs
        .iter()
        .copied()
        .filter(|&(u, v)| g.has_arc(v, u))
        .collect();
    Digraph::new(g.n, &arcs).expect("symmetric part of a valid digraph")
}

/// True when every arc of `g` is symmetric.
pub fn is_symmetric(g: &Digraph) -> bool {
    g.arcs.iter().all(|&(u, v)| g.has_arc(v, u))
}

/// An undirected graph on vertices `1..=n`; edges are unordered pairs stored
/// with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndiGraph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(UndiGraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

/// The underlying undirected graph of `g`: orientations dropped.
pub fn underlying_undirected(g: &Digraph) -> UndiGraph {
    UndiGraph::new(g.n, g.arcs()).expect("underlying graph of a valid digraph")
}

/// The complete biorientation of `h`: every edge replaced by both arcs.
pub fn biorientation(h: &UndiGraph) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * h.edges.len());
    for &(u, v) in &h.edges {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::new(h.n, &arcs).expect("biorientation of a valid graph")
}

/// A digraph together with a total map vertex -> {1..k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    pub graph: Digraph,
    k: Label,
    labels: Vec<Label>, // index 0 unused
}

impl LabeledDigraph {
    /// `labels[i]` is the label of vertex `i + 1`.
    pub fn new(graph: Digraph, k: Label, labels: Vec<Label>) -> Result<Self, GraphError> {
        if labels.len() != graph.n() {
            return Err(GraphError::ColoringSizeMismatch {
                got: labels.len(),
                expected: graph.n(),
            });
        }
        let mut full = Vec::with_capacity(graph.n() + 1);
        full.push(0);
        for &l in &labels {
            if l == 0 || l > k {
                return Err(GraphError::LabelOutOfRange { label: l, k });
            }
            full.push(l);
        }
        Ok(LabeledDigraph {
            graph,
            k,
            labels: full,
        })
    }

    pub fn k(&self) -> Label {
        self.k
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }
}

/// A set of label pairs (a, b), kept sorted and deduplicated.
///
/// When produced from a nonempty vertex set, the set contains (a, a) for
/// every label a occurring in the set: reachability includes the trivial
/// path from a vertex to itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReachSet(Vec<(Label, Label)>);

impl ReachSet {
    pub fn from_pairs(mut pairs: Vec<(Label, Label)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        ReachSet(pairs)
    }

    pub fn pairs(&self) -> &[(Label, Label)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pair: (Label, Label)) -> bool {
        self.0.binary_search(&pair).is_ok()
    }

    /// Set union of the pair sets.
    pub fn union(&self, other: &ReachSet) -> ReachSet {
        let mut pairs = self.0.clone();
        pairs.extend_from_slice(&other.0);
        ReachSet::from_pairs(pairs)
    }

    pub fn is_subset_of(&self, other: &ReachSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }
}

// Classes inside a signature are ordered by (size, lexicographic pair order).
impl Ord for ReachSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for ReachSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for ReachSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}

/// All pairs (a, b) such that some vertex labeled b is reachable inside
/// `g[class]` from some vertex labeled a. Reachability includes the trivial
/// path, so (label(u), label(u)) is present for every u in the class.
pub fn reach_pairs(g: &LabeledDigraph, class: &[usize]) -> ReachSet {
    let n = g.graph.n();
    let mut in_class = vec![false; n + 1];
    for &v in class {
        in_class[v] = true;
    }
    let mut pairs = BTreeSet::new();
    let mut seen = vec![false; n + 1];
    for &u in class {
        // BFS within the class from u.
        for &v in class {
            seen[v] = false;
        }
        seen[u] = true;
        let mut queue = vec![u];
        while let Some(x) = queue.pop() {
            pairs.insert((g.label(u), g.label(x)));
            for &y in g.graph.out_neighbors(x) {
                if in_class[y] && !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    ReachSet::from_pairs(pairs.into_iter().collect())
}

/// A total coloring vertex -> {1..r} with every color in use.
///
/// Validity (every color class inducing an acyclic subdigraph) is a property
/// relative to a digraph and is checked by [`check_acyclic_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>, // index 0 unused
    num_colors: usize,
}

impl Coloring {
    /// `per_vertex[i]` is the color of vertex `i + 1`; colors must be exactly
    /// `1..=r` for some `r` with every color used. A zero entry means the
    /// vertex is uncolored and yields `PartialColoring`.
    pub fn new(per_vertex: Vec<usize>) -> Result<Self, GraphError> {
        if let Some(i) = per_vertex.iter().position(|&c| c == 0) {
            return Err(GraphError::PartialColoring(i + 1));
        }
        let r = per_vertex.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; r + 1];
        for &c in &per_vertex {
            used[c] = true;
        }
        if let Some(c) = (1..=r).find(|&c| !used[c]) {
            let v = per_vertex.iter().position(|&x| x == r).unwrap() + 1;
            return Err(GraphError::BadColorRange {
                vertex: v,
                color: c,
                num_colors: r,
            });
        }
        let mut colors = Vec::with_capacity(per_vertex.len() + 1);
        colors.push(0);
        colors.extend(per_vertex);
        Ok(Coloring {
            colors,
            num_colors: r,
        })
    }

    /// Like [`Coloring::new`] but accepts arbitrary positive colors and
    /// compacts them to `1..=r`, preserving their relative order.
    pub fn from_sparse(per_vertex: Vec<usize>) -> Result<Self, GraphError> {
        if let Some(i) = per_vertex.iter().position(|&c| c == 0) {
            return Err(GraphError::PartialColoring(i + 1));
        }
        let mut distinct: Vec<usize> = per_vertex.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let compact = |c: usize| distinct.binary_search(&c).unwrap() + 1;
        Coloring::new(per_vertex.into_iter().map(compact).collect())
    }

    pub fn num_vertices(&self) -> usize {
        self.colors.len() - 1
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Vertices of color class `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (1..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    pub fn per_vertex(&self) -> &[usize] {
        &self.colors[1..]
    }
}

/// Verdict of validating a coloring against a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringVerdict {
    Valid,
    /// Some color class induces a cycle; `class` is the offending class and
    /// `cycle` a simple directed cycle inside it.
    Invalid {
        color: usize,
        class: Vec<usize>,
        cycle: Vec<usize>,
    },
}

impl ColoringVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ColoringVerdict::Valid)
    }
}

/// Checks that every color class of `c` induces an acyclic subdigraph of `g`.
pub fn check_acyclic_coloring(g: &Digraph, c: &Coloring) -> Result<ColoringVerdict, GraphError> {
    if c.num_vertices() != g.n() {
        return Err(GraphError::ColoringSizeMismatch {
            got: c.num_vertices(),
            expected: g.n(),
        });
    }
    for color in 1..=c.num_colors() {
        let class = c.class(color);
        let mut in_set = vec![false; g.n() + 1];
        for &v in &class {
            in_set[v] = true;
        }
        if let Acyclicity::Cyclic { cycle } = acyclicity_of_subset(g, &in_set) {
            return Ok(ColoringVerdict::Invalid {
                color,
                class,
                cycle,
            });
        }
    }
    Ok(ColoringVerdict::Valid)
}

/// Convenience constructors for the standard small digraphs used across the
/// test suites.
pub mod families {
    use super::Digraph;

    /// Directed path on n >= 1 vertices.
    pub fn directed_path(n: usize) -> Digraph {
        let arcs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    /// Directed cycle on n >= 2 vertices.
    pub fn directed_cycle(n: usize) -> Digraph {
        let mut arcs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        arcs.push((n, 1));
        Digraph::new(n, &arcs).unwrap()
    }

    /// Complete biorientation of K_n.
    pub fn bidirected_clique(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for u in 1..=n {
            for v in 1..=n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::new(n, &arcs).unwrap()
    }
}
