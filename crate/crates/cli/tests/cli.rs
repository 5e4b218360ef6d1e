use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const EXAMPLE_ONE: &str = "0 1\n2 3\n3 4\n2 4\n";
const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

/// K4 with a path of five edges joining vertices 0 and 1.
fn k4_with_path() -> String {
    format!("{K4}0 4\n4 5\n5 6\n6 7\n7 1\n")
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_homtest"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn bound_report_schema() {
    let report = json(&run(&["bound", "--tests", "k2,k3,c5", "--json", "--exact"], EXAMPLE_ONE));
    assert_eq!(report["best_bound"], 3);
    assert_eq!(report["exact_chi"], 3);
    assert_eq!(report["trivial_bound"], 2);
    assert_eq!(report["graph"], serde_json::json!({"n": 5, "m": 4, "folded_n": 5}));
    let tests = report["tests"].as_array().unwrap();
    assert_eq!(tests.len(), 3);
    for key in ["name", "chi_t", "empty", "d", "bound", "betti", "f_vector", "truncation_limited", "millis"] {
        assert!(tests.iter().all(|t| t.get(key).is_some()), "missing {key}");
    }
    assert_eq!(tests[0]["name"], "k2");
    assert_eq!(tests[0]["bound"], 2);
    assert_eq!(tests[1]["bound"], 3);
}

#[test]
fn human_output_matches_json() {
    let text = stdout(&run(&["bound"], &k4_with_path()));
    let report = json(&run(&["bound", "--json"], &k4_with_path()));
    assert_eq!(report["best_bound"], 4);
    assert!(text.contains("best bound: 4"), "{text}");
    assert!(text.contains("8 vertices, 11 edges (8 after folding)"), "{text}");
}

#[test]
fn edge_test_on_path_graph() {
    let report = json(&run(&["bound", "--tests", "k2", "--json", "--no-fold"], &k4_with_path()));
    assert_eq!(report["best_bound"], 3);
    assert_eq!(report["tests"][0]["d"], 0);
    assert_eq!(report["tests"][0]["betti"], serde_json::json!([0, 2]));
}

#[test]
fn edgeless_graph_has_empty_complexes() {
    let report = json(&run(&["bound", "--tests", "k3", "--json"], "# vertices 4\n"));
    assert_eq!(report["best_bound"], 1);
    assert_eq!(report["tests"][0]["empty"], true);
    assert_eq!(report["tests"][0]["d"], Value::Null);
}

#[test]
fn dimacs_input() {
    let dimacs = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    let report = json(&run(&["bound", "--format", "dimacs", "--json"], dimacs));
    assert_eq!(report["best_bound"], 3);
}

#[test]
fn file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, EXAMPLE_ONE).unwrap();
    let report = json(&run(&["bound", path.to_str().unwrap(), "--json"], ""));
    assert_eq!(report["best_bound"], 3);
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["bound"], "0 1\n1 x\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["bound"], "3 3\n").status.code(), Some(2));
    assert_eq!(run(&["bound", "/nonexistent/graph.txt"], "").status.code(), Some(2));
    assert_eq!(run(&["bound", "--format", "dimacs"], "e 1 2\n").status.code(), Some(2));
    assert_eq!(run(&["bound", "--frobnicate"], K4).status.code(), Some(2));
}

#[test]
fn unknown_test_lists_registry() {
    let out = run(&["bound", "--tests", "k2,petersen"], K4);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("k2, k3, k4, k5, c5, c7, c9"), "{err}");
}

#[test]
fn resource_cap_exits_3() {
    let out = run(&["bound", "--tests", "c5", "--cell-cap", "10"], K4);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["betti", "--tests", "c5", "--cell-cap", "10"], K4).status.code(), Some(3));
    let big: String = (1..25).map(|v| format!("0 {v}\n")).collect();
    assert_eq!(run(&["chi-exact"], &big).status.code(), Some(3));
}

#[test]
fn betti_examples() {
    let rows = json(&run(&["betti", "--tests", "c5", "--unreduced", "--json"], K4));
    assert_eq!(rows[0]["betti"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(rows[0]["f_vector"][0], 240);
    let rows = json(&run(&["betti", "--tests", "k2", "--json"], K4));
    assert_eq!(rows[0]["betti"], serde_json::json!([0, 0, 1]));
    let rows = json(&run(&["betti", "--tests", "k2", "--json"], "0 1\n"));
    assert_eq!(rows[0]["betti"], serde_json::json!([1]));
    let text = stdout(&run(&["betti", "--tests", "k2"], K4));
    assert!(text.contains("reduced Betti (0,0,1)"), "{text}");
}

#[test]
fn betti_with_max_dim() {
    let rows = json(&run(&["betti", "--tests", "c5", "--max-dim", "1", "--json"], K4));
    assert_eq!(rows[0]["betti"], serde_json::json!([0, 1]));
    assert_eq!(rows[0]["certified_through"], 1);
    assert_eq!(rows[0]["f_vector"].as_array().unwrap().len(), 3);
}

#[test]
fn hom_stats_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cells.txt");
    let rows = json(&run(
        &["hom-stats", "--tests", "k2", "--export", path.to_str().unwrap(), "--json"],
        K4,
    ));
    assert_eq!(rows[0]["f_vector"], serde_json::json!([12, 24, 14]));
    assert_eq!(rows[0]["complete"], true);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 50);
    assert!(text.lines().all(|l| l.split_once("; ").is_some()));
    let out = run(&["hom-stats", "--tests", "k2,k3", "--export", path.to_str().unwrap()], K4);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chi_exact_output() {
    let out = json(&run(&["chi-exact", "--json"], &k4_with_path()));
    assert_eq!(out["chi"], 4);
    assert!(out["greedy"].as_u64().unwrap() >= 4);
    assert!(stdout(&run(&["chi-exact"], EXAMPLE_ONE)).contains("chromatic number: 3"));
}

#[test]
fn fold_output_parses_back() {
    let pendant = format!("{K4}3 4\n4 5\n");
    let out = run(&["fold"], &pendant);
    let text = stdout(&out);
    assert!(text.starts_with("# folded 6 vertices to 4"), "{text}");
    let report = json(&run(&["bound", "--json", "--no-fold"], &text));
    assert_eq!(report["graph"]["n"], 4);
    assert_eq!(report["graph"]["m"], 6);
    let folded = json(&run(&["fold", "--json"], &pendant));
    assert_eq!(folded["map"].as_array().unwrap().len(), 6);
    let dimacs = stdout(&run(&["fold", "--format", "dimacs"], "p edge 3 2\ne 1 2\ne 2 3\n"));
    assert!(dimacs.contains("p edge 2 1"), "{dimacs}");
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"], "");
    assert!(out.status.success());
    assert!(stdout(&out).contains("all "));
    let results = json(&run(&["selftest", "--json"], ""));
    assert!(results.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn selftest_fixture_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cases.json");
    std::fs::write(&path, "[{\"name\": \"broken\", ").unwrap();
    let out = run(&["selftest", "--fixtures", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(2));

    let wrong = r#"[{"name": "wrong", "graph": "0 1\n", "test": "k2", "bound": 5}]"#;
    std::fs::write(&path, wrong).unwrap();
    let out = run(&["selftest", "--fixtures", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("FAIL wrong"));

    let right = r#"[{"name": "edge", "graph": "0 1\n", "test": "k2", "betti": [1], "bound": 2, "chi": 2}]"#;
    std::fs::write(&path, right).unwrap();
    assert!(run(&["selftest", "--fixtures", path.to_str().unwrap()], "").status.success());
}
