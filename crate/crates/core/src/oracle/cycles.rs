//! Enumeration of all simple directed cycles, one per rotation class. For
//! each start vertex `s` in increasing order, cycles whose minimum vertex
//! is `s` are found by a blocked DFS (Johnson's algorithm) inside the
//! strongly connected component of `s` in the subgraph induced on
//! `{s, ..., n}` — so every emitted sequence already starts at its minimum
//! vertex.

use crate::digraph::{scc_decompose, Digraph};

use super::OracleError;

/// Every simple directed cycle of `g` exactly once, each rotated so its
/// minimum vertex comes first, in lexicographic order of the sequences.
pub fn enumerate_simple_cycles(g: &Digraph, cap: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.n();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for s in 1..=n {
        // Adjacency of the SCC containing s within the induced {s..n}.
        let keep: Vec<usize> = (s..=n).collect();
        let (sub, old_ids) = g.induced(&keep);
        let scc = scc_decompose(&sub);
        let s_new = 1; // s is the least kept vertex, so it renumbers to 1
        let comp = scc.comp_of[s_new];
        let members: Vec<usize> = (1..=sub.n()).filter(|&v| scc.comp_of[v] == comp).collect();
        if members.len() < 2 {
            continue;
        }
        let mut ctx = Johnson {
            g: &sub,
            in_comp: {
                let mut m = vec![false; sub.n() + 1];
                for &v in &members {
                    m[v] = true;
                }
                m
            },
            blocked: vec![false; sub.n() + 1],
            block_list: vec![Vec::new(); sub.n() + 1],
            path: Vec::new(),
            out: &mut cycles,
            old_ids: &old_ids,
            cap,
            exceeded: false,
        };
        ctx.circuit(s_new, s_new);
        if ctx.exceeded {
            return Err(OracleError::CycleCountCapExceeded { cap });
        }
    }
    cycles.sort();
    Ok(cycles)
}

struct Johnson<'a> {
    g: &'a Digraph,
    in_comp: Vec<bool>,
    blocked: Vec<bool>,
    block_list: Vec<Vec<usize>>,
    path: Vec<usize>,
    out: &'a mut Vec<Vec<usize>>,
    old_ids: &'a [usize],
    cap: usize,
    exceeded: bool,
}

impl Johnson<'_> {
    fn circuit(&mut self, v: usize, s: usize) -> bool {
        if self.exceeded {
            return true;
        }
        let mut found = false;
        self.blocked[v] = true;
        self.path.push(v);
        for i in 0..self.g.out_neighbors(v).len() {
            let w = self.g.out_neighbors(v)[i];
            if !self.in_comp[w] {
                continue;
            }
            if w == s {
                if self.out.len() == self.cap {
                    self.exceeded = true;
                } else {
                    self.out
                        .push(self.path.iter().map(|&x| self.old_ids[x - 1]).collect());
                }
                found = true;
            } else if !self.blocked[w] && self.circuit(w, s) {
                found = true;
            }
            if self.exceeded {
                break;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for i in 0..self.g.out_neighbors(v).len() {
                let w = self.g.out_neighbors(v)[i];
                if self.in_comp[w] && !self.block_list[w].contains(&v) {
                    self.block_list[w].push(v);
                }
            }
        }
        self.path.pop();
        found
    }

    fn unblock(&mut self, v: usize) {
        self.blocked[v] = false;
        let waiters = std::mem::take(&mut self.block_list[v]);
        for u in waiters {
            if self.blocked[u] {
                self.unblock(u);
            }
        }
    }
}
