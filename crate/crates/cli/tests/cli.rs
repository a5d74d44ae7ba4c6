//! End-to-end runs of the compiled binary.

use std::path::{Path, PathBuf};
use std::process::Command;

const WORKED_EXPR: &str =
    "add(1,2,union(rel(2,1,add(2,1,add(1,2,union(v(v1,1),v(v2,2))))),v(v3,2)))\n";

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write(name: &str, text: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// Runs the binary, returning (exit code, stdout, stderr).
fn dichroma(args: &[&str]) -> (i32, String, String) {
    dichroma_env(args, &[])
}

fn dichroma_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dichroma"));
    cmd.args(args);
    for &(k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_cw_reports_the_value() {
    let expr = write("worked.cwx", WORKED_EXPR);
    let (code, stdout, _) = dichroma(&["solve-cw", "--expr", path(&expr)]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "dichromatic_number: 2\n");
}

#[test]
fn solve_cw_decision_mode_uses_the_exit_code() {
    let expr = write("worked_decide.cwx", WORKED_EXPR);
    let (code, stdout, _) = dichroma(&["solve-cw", "--expr", path(&expr), "--r", "1"]);
    assert_eq!(code, 1);
    assert_eq!(stdout, "r: 1\nfeasible: false\n");
    let (code, stdout, _) = dichroma(&["solve-cw", "--expr", path(&expr), "--r", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "r: 2\nfeasible: true\n");
}

#[test]
fn solve_cw_writes_witness_dump_and_dot() {
    let expr = write("worked_files.cwx", WORKED_EXPR);
    let (witness, dump, dot) = (tmp("worked.col"), tmp("worked.sigs"), tmp("worked.dot"));
    let (code, _, _) = dichroma(&[
        "solve-cw",
        "--expr",
        path(&expr),
        "--witness",
        path(&witness),
        "--dump-sigsets",
        path(&dump),
        "--dot",
        path(&dot),
    ]);
    assert_eq!(code, 0);

    let col = std::fs::read_to_string(&witness).unwrap();
    assert_eq!(col.lines().count(), 3);
    let dump_text = std::fs::read_to_string(&dump).unwrap();
    assert!(dump_text.starts_with("node 1: v(v1,1)\n"));
    assert!(dump_text.contains("node 9: add(1,2,node 8)\n"));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("digraph g {"));
    assert!(dot_text.contains("fillcolor"));

    // the emitted witness validates against the evaluated graph
    let graph = write("worked.dg", "3 4\n1 2\n1 3\n2 1\n2 3\n");
    let (code, stdout, _) = dichroma(&["check", "--graph", path(&graph), "--coloring", path(&witness)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("valid: true"));
    assert!(stdout.contains("colors: 2"));
}

#[test]
fn check_rejects_a_monochromatic_cycle() {
    let graph = write("c3.dg", "3 3\n1 2\n2 3\n3 1\n");
    let coloring = write("mono.col", "1 1\n2 1\n3 1\n");
    let (code, stdout, _) = dichroma(&["check", "--graph", path(&graph), "--coloring", path(&coloring)]);
    assert_eq!(code, 1);
    assert!(stdout.contains("valid: false"));
    assert!(stdout.contains("cycle: [1,2,3]"));
}

#[test]
fn generated_cactus_solves_and_validates() {
    let out = tmp("gen_cactus.dg");
    let (code, _, _) = dichroma(&["gen", "cactus", "--n", "20", "--seed", "7", "--out", path(&out)]);
    assert_eq!(code, 0);
    let witness = tmp("gen_cactus.col");
    let (code, stdout, _) = dichroma(&[
        "solve-cactus",
        "--graph",
        path(&out),
        "--witness",
        path(&witness),
    ]);
    assert_eq!(code, 0);
    let value: usize = stdout
        .lines()
        .find_map(|l| l.strip_prefix("dichromatic_number: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(value <= 2);
    let (code, _, _) = dichroma(&["check", "--graph", path(&out), "--coloring", path(&witness)]);
    assert_eq!(code, 0);
}

#[test]
fn solve_cactus_refuses_non_cacti() {
    let graph = write("k3.dg", "3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2\n");
    let (code, _, stderr) = dichroma(&["solve-cactus", "--graph", path(&graph)]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error:"));
}

#[test]
fn solve_picks_strategies_and_agrees_with_brute() {
    let dag = write("dag.dg", "3 2\n1 2\n2 3\n");
    let (_, stdout, _) = dichroma(&["solve", "--graph", path(&dag)]);
    assert_eq!(stdout, "dichromatic_number: 1\nstrategy: dag\n");

    let c5 = write("c5.dg", "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let (_, stdout, _) = dichroma(&["solve", "--graph", path(&c5)]);
    assert_eq!(stdout, "dichromatic_number: 2\nstrategy: cactus\n");

    let k3 = write("k3_solve.dg", "3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2\n");
    let (_, stdout, _) = dichroma(&["solve", "--graph", path(&k3)]);
    assert_eq!(stdout, "dichromatic_number: 3\nstrategy: brute\n");
    let (_, stdout, _) = dichroma(&["solve", "--graph", path(&k3), "--strategy", "brute"]);
    assert_eq!(stdout, "dichromatic_number: 3\nstrategy: brute\n");
}

#[test]
fn json_mode_mirrors_the_fields() {
    let c5 = write("c5_json.dg", "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let (code, stdout, _) = dichroma(&["solve", "--graph", path(&c5), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dichromatic_number"], 2);
    assert_eq!(v["strategy"], "cactus");
}

#[test]
fn classify_prints_key_value_lines() {
    let c3 = write("c3_classify.dg", "3 3\n1 2\n2 3\n3 1\n");
    let (code, stdout, _) = dichroma(&["classify", "--graph", path(&c3)]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n: 3\nm: 3\nis_dag: false\nis_symmetric: false\nis_cactus_forest: true\n\
         chi_lower: 2\nchi_upper: 2\n"
    );
}

#[test]
fn brute_respects_max_r() {
    let k3 = write("k3_brute.dg", "3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2\n");
    let (code, stdout, _) = dichroma(&["brute", "--graph", path(&k3)]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "dichromatic_number: 3\n");
    let (code, _, stderr) = dichroma(&["brute", "--graph", path(&k3), "--max-r", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error:"));
}

#[test]
fn export_ilp_writes_the_model() {
    let c3 = write("c3_ilp.dg", "3 3\n1 2\n2 3\n3 1\n");
    let out = tmp("c3.lp");
    let (code, stdout, _) = dichroma(&["export-ilp", "--graph", path(&c3), "--out", path(&out)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("binary_variables: 12"));
    assert!(stdout.contains("rows: 21"));
    let lp = std::fs::read_to_string(&out).unwrap();
    assert!(lp.starts_with("\\ minimum acyclic coloring"));
    assert!(lp.ends_with("End\n"));
}

#[test]
fn solve_cograph_reports_clique_number() {
    let expr = write("pair.dce", "order(series(v(a),v(b)),union(v(c),v(d)))\n");
    let (code, stdout, _) = dichroma(&[
        "solve-cograph",
        "--expr",
        path(&expr),
        "--clique-number",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "dichromatic_number: 2\nclique_number: 2\n");
}

#[test]
fn generators_are_deterministic() {
    let (a, b) = (tmp("det_a.dg"), tmp("det_b.dg"));
    for out in [&a, &b] {
        let (code, _, _) = dichroma(&[
            "gen", "digraph", "--n", "9", "--p", "0.3", "--seed", "11", "--out", path(out),
        ]);
        assert_eq!(code, 0);
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = dichroma(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = dichroma(&["solve"]);
    assert_eq!(code, 2);
    let (code, _, _) = dichroma(&["gen", "digraph", "--n", "0", "--seed", "1", "--out", "x"]);
    assert_eq!(code, 2);
    let (code, _, _) = dichroma(&[
        "gen", "digraph", "--n", "3", "--p", "1.5", "--seed", "1", "--out", "x",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn missing_and_malformed_files_exit_one() {
    let (code, _, stderr) = dichroma(&["solve", "--graph", path(&tmp("nope.dg"))]);
    assert_eq!(code, 1);
    assert!(stderr.contains("reading"));
    let bad = write("bad.dg", "2 1\n1 1\n");
    let (code, _, stderr) = dichroma(&["solve", "--graph", path(&bad)]);
    assert_eq!(code, 1);
    assert!(stderr.contains("parsing"));
}

#[test]
fn signature_cap_env_var_is_honored() {
    let expr = write("capped.cwx", WORKED_EXPR);
    let (code, _, stderr) = dichroma_env(
        &["solve-cw", "--expr", path(&expr)],
        &[("DICHROMA_SIG_CAP", "1")],
    );
    assert_eq!(code, 1);
    assert!(stderr.contains("cap"));
    let (code, _, _) = dichroma_env(
        &["solve-cw", "--expr", path(&expr)],
        &[("DICHROMA_SIG_CAP", "not-a-number")],
    );
    assert_eq!(code, 1);
}
