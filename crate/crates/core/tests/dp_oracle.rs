//! Cross-validation of the signature DP against direct enumeration of
//! acyclic partitions, node by node, on random expressions.

use std::collections::BTreeSet;

use dichroma::cwdp::{postorder, DpRun, Signature, DEFAULT_SIG_CAP};
use dichroma::digraph::check_acyclic_coloring;
use dichroma::expr::{eval_cw, CwExpression};
use dichroma::oracle::{brute_force_dcn, enumerate_acyclic_partitions, gen_random_cw_expr};

/// The signature set the DP must produce at a node, computed independently:
/// enumerate all acyclic partitions of the node's evaluated graph and
/// collect the distinct signatures.
fn oracle_sigset(e: &CwExpression) -> BTreeSet<Signature> {
    enumerate_acyclic_partitions(&eval_cw(e).graph)
        .into_iter()
        .map(|p| p.signature)
        .collect()
}

#[test]
fn dp_equals_partition_enumeration_per_node() {
    for seed in 0..120 {
        let k = 1 + seed % 3;
        let n = 1 + (seed as usize * 7 + 3) % 6;
        let e = gen_random_cw_expr(k, n, 1000 + seed as u64);
        let run = DpRun::new(&e, DEFAULT_SIG_CAP).unwrap();
        let subs = postorder(e.root());
        assert_eq!(subs.len(), run.nodes().len());
        for (i, sub) in subs.iter().enumerate() {
            let sub_expr = CwExpression::new(e.k(), (*sub).clone()).unwrap();
            let expected = oracle_sigset(&sub_expr);
            let got: BTreeSet<Signature> = run.sigset(i).sigs().iter().cloned().collect();
            assert_eq!(
                got,
                expected,
                "node {i} of seed {seed}: {}",
                sub_expr.to_text()
            );
        }
    }
}

#[test]
fn dp_value_and_witness_match_brute_force() {
    for seed in 0..150 {
        let k = 1 + seed % 3;
        let n = 1 + (seed as usize * 5 + 1) % 7;
        let e = gen_random_cw_expr(k, n, 2000 + seed as u64);
        let run = DpRun::new(&e, DEFAULT_SIG_CAP).unwrap();
        let ev = eval_cw(&e);
        let (chi, _) = brute_force_dcn(&ev.graph.graph, None).unwrap();
        assert_eq!(run.dichromatic_number(), chi, "seed {seed}");
        let w = run.witness();
        assert_eq!(w.num_colors(), chi, "seed {seed}");
        assert!(
            check_acyclic_coloring(&ev.graph.graph, &w).unwrap().is_valid(),
            "seed {seed}"
        );
    }
}
