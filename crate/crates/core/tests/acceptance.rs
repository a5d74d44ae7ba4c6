//! Acceptance gate: one test per release criterion, each a single pass/fail
//! line in the harness output, with the agreed runtime budgets asserted.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use dichroma::cwdp::{postorder, solve_dcn, DpRun, Signature, DEFAULT_SIG_CAP};
use dichroma::digraph::{biorientation, families::*, is_symmetric};
use dichroma::expr::{eval_cw, eval_dico, parse_cw, CwExpression};
use dichroma::family::{cactus_color, cograph_clique_number, cograph_dcn};
use dichroma::ilp::{export_lp, import_solution, IlpModel};
use dichroma::oracle::{
    brute_force_chromatic, brute_force_clique_number_d, brute_force_dcn,
    enumerate_acyclic_partitions, gen_random_cactus, gen_random_cw_expr, gen_random_dico_expr,
    gen_random_digraph,
};
use dichroma::{
    check_acyclic_coloring, is_acyclic, symmetric_part, underlying_undirected, Coloring, Digraph,
};

const WORKED_EXPR: &str =
    "add(1,2,union(rel(2,1,add(2,1,add(1,2,union(v(v1,1),v(v2,2))))),v(v3,2)))";

const WORKED_SIGSETS: &str = "\
node 1: v(v1,1)
  <{(1,1)}>
node 2: v(v2,2)
  <{(2,2)}>
node 3: union(node 1, node 2)
  <{(1,1),(2,2)}>
  <{(1,1)},{(2,2)}>
node 4: add(1,2,node 3)
  <{(1,1),(1,2),(2,2)}>
  <{(1,1)},{(2,2)}>
node 5: add(2,1,node 4)
  <{(1,1)},{(2,2)}>
node 6: rel(2,1,node 5)
  <{(1,1)},{(1,1)}>
node 7: v(v3,2)
  <{(2,2)}>
node 8: union(node 6, node 7)
  <{(1,1)},{(1,1),(2,2)}>
  <{(1,1)},{(1,1)},{(2,2)}>
node 9: add(1,2,node 8)
  <{(1,1)},{(1,1),(1,2),(2,2)}>
  <{(1,1)},{(1,1)},{(2,2)}>
";

fn assert_budget(start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:.2?}, over the {budget:.2?} budget"
    );
}

/// The signature sets of every subexpression, computed independently of the
/// DP by enumerating all acyclic partitions of the evaluated subgraph.
fn oracle_sigsets(e: &CwExpression) -> Vec<BTreeSet<Signature>> {
    postorder(e.root())
        .into_iter()
        .map(|sub| {
            let sub_e =
                CwExpression::new(e.k(), sub.clone()).expect("subtrees stay well-formed");
            enumerate_acyclic_partitions(&eval_cw(&sub_e).graph)
                .into_iter()
                .map(|p| p.signature)
                .collect()
        })
        .collect()
}

fn cw_corpus(count: u64) -> impl Iterator<Item = (u64, CwExpression)> {
    (0..count).map(|seed| {
        let k = 1 + (seed % 3) as u32;
        let n = 1 + (seed % 7) as usize;
        (seed, gen_random_cw_expr(k, n, seed))
    })
}

#[test]
fn criterion_1_golden_worked_example() {
    let start = Instant::now();
    let e = parse_cw(WORKED_EXPR).unwrap();
    let run = DpRun::new(&e, DEFAULT_SIG_CAP).unwrap();
    assert_eq!(run.dump_sigsets(), WORKED_SIGSETS);
    assert_eq!(run.dichromatic_number(), 2);
    assert_budget(start, Duration::from_secs(1), "golden example");
}

#[test]
fn criterion_2_dp_equals_oracle_on_500_expressions() {
    let start = Instant::now();
    for (seed, e) in cw_corpus(500) {
        let run = DpRun::new(&e, DEFAULT_SIG_CAP).unwrap();
        for (i, oracle) in oracle_sigsets(&e).into_iter().enumerate() {
            let dp: BTreeSet<Signature> = run.sigset(i).sigs().iter().cloned().collect();
            assert_eq!(dp, oracle, "seed {seed}, node {}", i + 1);
        }
        let (chi, _) = solve_dcn(&e, DEFAULT_SIG_CAP).unwrap();
        let (exact, _) = brute_force_dcn(&eval_cw(&e).graph.graph, None).unwrap();
        assert_eq!(chi, exact, "seed {seed}");
    }
    assert_budget(start, Duration::from_secs(120), "dp-oracle corpus");
}

#[test]
fn criterion_3_cograph_suite_on_500_expressions() {
    let start = Instant::now();
    for seed in 0..500u64 {
        let n = 1 + (seed % 10) as usize;
        let e = gen_random_dico_expr(n, seed);
        let g = eval_dico(&e).graph;

        let (chi, witness) = cograph_dcn(&e);
        let (exact, _) = brute_force_dcn(&g, None).unwrap();
        assert_eq!(chi, exact, "seed {seed}");
        assert!(
            check_acyclic_coloring(&g, &witness).unwrap().is_valid(),
            "seed {seed}"
        );

        // perfectness chain: dichromatic number = clique number, computed
        // four independent ways
        let omega = cograph_clique_number(&e);
        assert_eq!(chi, omega, "seed {seed}");
        assert_eq!(omega, brute_force_clique_number_d(&g), "seed {seed}");
        let h = underlying_undirected(&symmetric_part(&g));
        assert_eq!(omega, brute_force_chromatic(&h).0, "seed {seed}");
    }
    assert_budget(start, Duration::from_secs(120), "cograph corpus");
}

#[test]
fn criterion_4_cactus_suite_on_1000_forests() {
    let start = Instant::now();
    for seed in 0..1000u64 {
        let n = 1 + (seed % 30) as usize;
        let g = gen_random_cactus(n, seed);
        let (chi, witness) = cactus_color(&g).expect("generated cacti decompose");
        assert!(chi <= 2, "seed {seed}");
        assert!(
            check_acyclic_coloring(&g, &witness).unwrap().is_valid(),
            "seed {seed}"
        );
        assert_eq!(chi == 1, is_acyclic(&g), "seed {seed}");
        if n <= 12 {
            assert_eq!(chi, brute_force_dcn(&g, None).unwrap().0, "seed {seed}");
        }
    }
    assert_budget(start, Duration::from_secs(60), "cactus corpus");
}

#[test]
fn criterion_5_symmetric_digraphs_match_chromatic_number() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let n = 1 + (seed % 8) as usize;
        let h = underlying_undirected(&gen_random_digraph(n, 0.5, seed));
        let bi = biorientation(&h);
        assert!(is_symmetric(&bi));
        let (dcn, _) = brute_force_dcn(&bi, None).unwrap();
        let (chi, _) = brute_force_chromatic(&h);
        assert_eq!(dcn, chi, "seed {seed}");
    }
    assert_budget(start, Duration::from_secs(60), "symmetric corpus");
}

#[test]
fn criterion_6_signature_count_bound() {
    let worked = parse_cw(WORKED_EXPR).unwrap();
    let corpus = cw_corpus(500).chain([(u64::MAX, worked)]);
    for (seed, e) in corpus {
        let run = DpRun::new(&e, DEFAULT_SIG_CAP).unwrap();
        let exponent = 2f64.powi((e.k() * e.k()) as i32) - 1.0;
        for (i, sub) in postorder(e.root()).into_iter().enumerate() {
            let n_sub = sub.num_leaves() as f64;
            let lhs = (run.sigset(i).len() as f64).ln();
            let rhs = exponent * (n_sub + 1.0).ln();
            assert!(
                lhs <= rhs + 1e-9,
                "seed {seed}, node {}: {} signatures exceed the bound",
                i + 1,
                run.sigset(i).len()
            );
        }
    }
}

#[test]
fn criterion_7_ilp_model_structure_and_optional_solver() {
    for seed in 0..50u64 {
        let n = 1 + (seed % 8) as usize;
        let g = gen_random_digraph(n, 0.4, seed);
        let m = g.arcs().len();
        let model = IlpModel::new(&g);
        assert_eq!(model.num_binary_vars(), n + n * n, "seed {seed}");
        assert_eq!(model.num_general_vars(), n, "seed {seed}");
        assert_eq!(model.num_assignment_rows(), n, "seed {seed}");
        assert_eq!(model.num_linking_rows(), n * n, "seed {seed}");
        assert_eq!(model.num_ordering_rows(), m * n, "seed {seed}");
        let text = model.to_lp_text();
        for (prefix, expected) in [("assign_", n), ("link_", n * n), ("order_", m * n)] {
            let rows = text
                .lines()
                .filter(|l| l.trim_start().starts_with(prefix))
                .count();
            assert_eq!(rows, expected, "seed {seed}, {prefix} rows in the text");
        }
    }

    match std::env::var("DICHROMA_MILP_TEST").as_deref() {
        Ok("0") => eprintln!("note: MILP solver check disabled by DICHROMA_MILP_TEST=0"),
        Ok(_) => solve_exported_models(true),
        Err(_) => solve_exported_models(false),
    }
}

/// Solves a dozen exported models with the scipy-based helper and compares
/// optima against brute force. `required` turns a missing solver into a
/// failure instead of a skip.
fn solve_exported_models(required: bool) {
    let have_scipy = Command::new("python3")
        .args(["-c", "from scipy.optimize import milp"])
        .status()
        .map(|s| s.success())
        .unwrap_or(false);
    if !have_scipy {
        assert!(!required, "DICHROMA_MILP_TEST is set but python3+scipy is unavailable");
        eprintln!("note: skipping MILP solver check (no python3 with scipy)");
        return;
    }
    let helper = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/helpers/solve_lp.py");
    for seed in 0..12u64 {
        let n = 1 + (seed % 6) as usize;
        let g = gen_random_digraph(n, 0.45, seed);
        let lp_path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("model_{seed}.lp"));
        std::fs::write(&lp_path, export_lp(&g)).unwrap();
        let out = Command::new("python3")
            .arg(&helper)
            .arg(&lp_path)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "seed {seed}: solver failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let stdout = String::from_utf8(out.stdout).unwrap();
        let objective: f64 = stdout
            .lines()
            .find_map(|l| l.strip_prefix("objective "))
            .expect("an objective line")
            .parse()
            .unwrap();
        let optimum = objective.round() as usize;

        let (exact, _) = brute_force_dcn(&g, None).unwrap();
        assert_eq!(optimum, exact, "seed {seed}: solver optimum vs brute force");
        let coloring = import_solution(&stdout, &g).unwrap();
        assert_eq!(coloring.num_colors(), exact, "seed {seed}");
    }
}

#[test]
fn criterion_8_witnesses_validate_and_use_the_reported_colors() {
    fn checked(g: &Digraph, chi: usize, w: &Coloring, what: &str) {
        assert_eq!(w.num_colors(), chi, "{what}: color count");
        assert!(
            check_acyclic_coloring(g, w).unwrap().is_valid(),
            "{what}: validity"
        );
    }

    for (seed, e) in cw_corpus(150) {
        let (chi, w) = solve_dcn(&e, DEFAULT_SIG_CAP).unwrap();
        checked(&eval_cw(&e).graph.graph, chi, &w, &format!("dp witness, seed {seed}"));
    }
    for seed in 0..150u64 {
        let e = gen_random_dico_expr(1 + (seed % 10) as usize, seed);
        let (chi, w) = cograph_dcn(&e);
        checked(&eval_dico(&e).graph, chi, &w, &format!("cograph witness, seed {seed}"));
    }
    for seed in 0..200u64 {
        let g = gen_random_cactus(1 + (seed % 30) as usize, seed);
        let (chi, w) = cactus_color(&g).unwrap();
        checked(&g, chi, &w, &format!("cactus witness, seed {seed}"));
    }
    for seed in 0..60u64 {
        let g = gen_random_digraph(1 + (seed % 8) as usize, 0.5, seed);
        let (chi, w) = brute_force_dcn(&g, None).unwrap();
        checked(&g, chi, &w, &format!("brute witness, seed {seed}"));
    }
    checked(
        &directed_cycle(9),
        2,
        &cactus_color(&directed_cycle(9)).unwrap().1,
        "long cycle",
    );
}
