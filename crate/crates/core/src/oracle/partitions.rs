//! Direct enumeration of all partitions of a labeled digraph's vertices
//! into acyclic classes — the independent ground truth the signature DP is
//! checked against.

use crate::cwdp::Signature;
use crate::digraph::{acyclicity_of_subset, LabeledDigraph};

/// One acyclic partition: its classes (each ascending, ordered by first
/// vertex) and its signature.
#[derive(Debug, Clone)]
pub struct AcyclicPartition {
    pub classes: Vec<Vec<usize>>,
    pub signature: Signature,
}

/// All partitions of the vertex set into acyclic classes. Practical for a
/// handful of vertices (the count is bounded by the Bell numbers).
pub fn enumerate_acyclic_partitions(g: &LabeledDigraph) -> Vec<AcyclicPartition> {
    let n = g.graph.n();
    let mut out = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    extend(g, 1, n, &mut classes, &mut out);
    out
}

fn extend(
    g: &LabeledDigraph,
    v: usize,
    n: usize,
    classes: &mut Vec<Vec<usize>>,
    out: &mut Vec<AcyclicPartition>,
) {
    if v > n {
        if !classes.is_empty() || n == 0 {
            out.push(AcyclicPartition {
                classes: classes.clone(),
                signature: Signature::of_partition(g, classes),
            });
        }
        return;
    }
    // Vertex v joins an existing class or (restricted growth: only one
    // fresh slot) opens a new one; a singleton is always acyclic.
    for i in 0..classes.len() {
        classes[i].push(v);
        if class_is_acyclic(g, &classes[i]) {
            extend(g, v + 1, n, classes, out);
        }
        classes[i].pop();
    }
    classes.push(vec![v]);
    extend(g, v + 1, n, classes, out);
    classes.pop();
}

fn class_is_acyclic(g: &LabeledDigraph, class: &[usize]) -> bool {
    let mut in_set = vec![false; g.graph.n() + 1];
    for &v in class {
        in_set[v] = true;
    }
    acyclicity_of_subset(&g.graph, &in_set).is_acyclic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{Digraph, LabeledDigraph};

    fn labeled(n: usize, arcs: &[(usize, usize)], k: u32, labels: &[u32]) -> LabeledDigraph {
        LabeledDigraph::new(Digraph::new(n, arcs).unwrap(), k, labels.to_vec()).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = labeled(1, &[], 1, &[1]);
        let parts = enumerate_acyclic_partitions(&g);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].classes, vec![vec![1]]);
        assert_eq!(parts[0].signature.to_string(), "<{(1,1)}>");
    }

    #[test]
    fn two_cycle_forces_separation() {
        let g = labeled(2, &[(1, 2), (2, 1)], 1, &[1, 1]);
        let parts = enumerate_acyclic_partitions(&g);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].classes, vec![vec![1], vec![2]]);
        assert_eq!(parts[0].signature.to_string(), "<{(1,1)},{(1,1)}>");
    }

    #[test]
    fn counts_follow_bell_numbers_on_arcless_graphs() {
        // All partitions of an arcless graph are acyclic: 1, 2, 5, 15.
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15)] {
            let g = labeled(n, &[], 1, &vec![1; n]);
            assert_eq!(enumerate_acyclic_partitions(&g).len(), bell);
        }
    }

    #[test]
    fn partition_classes_cover_everything_once() {
        let g = labeled(4, &[(1, 2), (2, 3), (3, 1), (3, 4)], 2, &[1, 2, 1, 2]);
        for part in enumerate_acyclic_partitions(&g) {
            let mut all: Vec<usize> = part.classes.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, vec![1, 2, 3, 4]);
        }
    }
}
