//! Seeded random instance generators. A fixed seed yields byte-identical
//! output across runs and platforms (a dedicated counter-based stream
//! cipher RNG, not the OS generator).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, Label};
use crate::expr::{CwExpr, CwExpression, DiCoExpr, DiCoExpression};

/// Erdős–Rényi style digraph: each ordered pair becomes an arc
/// independently with probability `p`.
pub fn gen_random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0,1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).expect("generated arcs are valid")
}

fn two_distinct_labels(rng: &mut ChaCha8Rng, k: Label) -> (Label, Label) {
    let a = rng.gen_range(1..=k);
    let b = loop {
        let b = rng.gen_range(1..=k);
        if b != a {
            break b;
        }
    };
    (a, b)
}

fn random_unary(rng: &mut ChaCha8Rng, k: Label, e: CwExpr) -> CwExpr {
    let (from, to) = two_distinct_labels(rng, k);
    let child = Box::new(e);
    if rng.gen_bool(0.7) {
        CwExpr::EdgeInsert { from, to, child }
    } else {
        CwExpr::Relabel { from, to, child }
    }
}

/// Random well-formed clique-width expression with `n` leaves named
/// `v1..vn` and labels in `1..=k`: arc insertions and relabelings are
/// interleaved with disjoint unions, plus a few closing insertions at the
/// root. With `k = 1` no insertion is possible and the result is an
/// expression for an arcless graph.
pub fn gen_random_cw_expr(k: Label, n: usize, seed: u64) -> CwExpression {
    assert!(k >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items: Vec<CwExpr> = (1..=n)
        .map(|i| CwExpr::Create {
            name: format!("v{i}"),
            label: rng.gen_range(1..=k),
        })
        .collect();
    while items.len() > 1 {
        if k >= 2 && rng.gen_bool(0.4) {
            let i = rng.gen_range(0..items.len());
            let e = items.swap_remove(i);
            items.push(random_unary(&mut rng, k, e));
        } else {
            let i = rng.gen_range(0..items.len());
            let left = Box::new(items.swap_remove(i));
            let j = rng.gen_range(0..items.len());
            let right = Box::new(items.swap_remove(j));
            items.push(CwExpr::Union { left, right });
        }
    }
    let mut root = items.pop().expect("n >= 1 leaves");
    if k >= 2 {
        for _ in 0..rng.gen_range(0..3) {
            root = random_unary(&mut rng, k, root);
        }
    }
    CwExpression::new(k, root).expect("generator emits well-formed expressions")
}

/// Random co-graph expression with `n` leaves named `v1..vn`, using all
/// four compositions; directed unions carry a random subset of the legal
/// left-to-right arcs.
pub fn gen_random_dico_expr(n: usize, seed: u64) -> DiCoExpression {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Each item keeps its leaf names for drawing directed-union arcs.
    let mut items: Vec<(DiCoExpr, Vec<String>)> = (1..=n)
        .map(|i| {
            let name = format!("v{i}");
            (DiCoExpr::Vertex { name: name.clone() }, vec![name])
        })
        .collect();
    while items.len() > 1 {
        let i = rng.gen_range(0..items.len());
        let (le, lnames) = items.swap_remove(i);
        let j = rng.gen_range(0..items.len());
        let (re, rnames) = items.swap_remove(j);
        let left = Box::new(le);
        let right = Box::new(re);
        let node = match rng.gen_range(0..4) {
            0 => DiCoExpr::Union { left, right },
            1 => DiCoExpr::Series { left, right },
            2 => DiCoExpr::Order { left, right },
            _ => {
                let mut arcs = Vec::new();
                for ln in &lnames {
                    for rn in &rnames {
                        if rng.gen_bool(0.4) {
                            arcs.push((ln.clone(), rn.clone()));
                        }
                    }
                }
                DiCoExpr::DUnion { left, right, arcs }
            }
        };
        let mut names = lnames;
        names.extend(rnames);
        items.push((node, names));
    }
    let (root, _) = items.pop().expect("n >= 1 leaves");
    DiCoExpression::new(root).expect("generator emits well-formed expressions")
}

/// Random directed cactus forest on exactly `n` vertices: directed cycles
/// and pendant arcs are attached to single existing vertices, and fresh
/// isolated roots start new components. Any two cycles meet in at most the
/// shared attachment vertex, so the result is a cactus forest by
/// construction.
pub fn gen_random_cactus(n: usize, seed: u64) -> Digraph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut created = 1usize; // vertex 1 is the first root
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    while created < n {
        let remaining = n - created;
        let roll = rng.gen_range(0..10);
        if roll < 6 {
            // Attach a directed cycle of length 2..=6 at an existing vertex:
            // x -> new_1 -> ... -> new_t -> x.
            let x = rng.gen_range(1..=created);
            let t = rng.gen_range(1..=remaining.min(5));
            let mut prev = x;
            for _ in 0..t {
                created += 1;
                arcs.push((prev, created));
                prev = created;
            }
            arcs.push((prev, x));
        } else if roll < 9 {
            // Pendant arc to a brand-new vertex, random orientation.
            let x = rng.gen_range(1..=created);
            created += 1;
            if rng.gen_bool(0.5) {
                arcs.push((x, created));
            } else {
                arcs.push((created, x));
            }
        } else {
            // Fresh isolated root.
            created += 1;
        }
    }
    Digraph::new(n, &arcs).expect("generated arcs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{eval_cw, eval_dico};

    #[test]
    fn digraph_generator_determinism_and_extremes() {
        let a = gen_random_digraph(8, 0.3, 11);
        let b = gen_random_digraph(8, 0.3, 11);
        assert_eq!(a, b);
        assert_ne!(a, gen_random_digraph(8, 0.3, 12));
        assert_eq!(gen_random_digraph(6, 0.0, 5).m(), 0);
        assert_eq!(gen_random_digraph(4, 1.0, 5).m(), 12);
    }

    #[test]
    fn single_leaf_dico_expr() {
        let e = gen_random_dico_expr(1, 42);
        assert_eq!(e.to_text(), "v(v1)\n");
    }

    #[test]
    fn cw_generator_is_deterministic_and_well_formed() {
        for seed in 0..30 {
            let e = gen_random_cw_expr(3, 6, seed);
            assert_eq!(e, gen_random_cw_expr(3, 6, seed));
            let ev = eval_cw(&e);
            assert_eq!(ev.graph.graph.n(), 6);
        }
        let e = gen_random_cw_expr(1, 4, 9);
        assert_eq!(eval_cw(&e).graph.graph.m(), 0);
    }

    #[test]
    fn dico_generator_covers_all_node_kinds() {
        let mut saw_dunion = false;
        for seed in 0..40 {
            let e = gen_random_dico_expr(6, seed);
            assert_eq!(e, gen_random_dico_expr(6, seed));
            saw_dunion |= e.root().has_dunion();
            assert_eq!(eval_dico(&e).graph.n(), 6);
        }
        assert!(saw_dunion);
    }

    #[test]
    fn cactus_generator_vertex_count() {
        for seed in 0..50 {
            let g = gen_random_cactus(12, seed);
            assert_eq!(g.n(), 12);
            assert_eq!(g, gen_random_cactus(12, seed));
        }
        assert_eq!(gen_random_cactus(1, 3).m(), 0);
    }
}
