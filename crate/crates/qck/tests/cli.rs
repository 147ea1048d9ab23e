//! End-to-end tests of the `qck` binary: exit codes, JSON output shapes,
//! and file export.

use std::process::{Command, Output};

fn qck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qck"))
        .args(args)
        .env_remove("QCK_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn congruent_exit_codes() {
    let yes = qck(&[
        "congruent", "--type", "C", "--rank", "2", "--left", "1 -1 1 -1", "--right", "1 -1",
    ]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&yes.stdout).trim(), "congruent");

    let no = qck(&[
        "congruent", "--type", "C", "--rank", "2", "--left", "1 -1", "--right", "",
    ]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&no.stdout).trim(), "not congruent");
}

#[test]
fn congruent_json_output() {
    let out = qck(&[
        "congruent", "--json", "--type", "C", "--rank", "2", "--left", "1 2 1 1 1 2", "--right",
        "1 1 1 1 2 2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["congruent"], serde_json::json!(true));
    assert_eq!(v["classical"], serde_json::json!(false));
}

#[test]
fn classical_congruence_type_a() {
    let out = qck(&[
        "congruent",
        "--classical",
        "--type",
        "A",
        "--rank",
        "3",
        "--left",
        "1 3 2",
        "--right",
        "3 1 2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn explore_exports_component_json() {
    let out = qck(&[
        "explore", "--type", "C", "--rank", "2", "--word", "1 2 1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["alphabet"]["kind"], serde_json::json!("C"));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 7);
    assert_eq!(v["loops"].as_array().unwrap().len(), 5);
}

#[test]
fn explore_writes_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let out = qck(&[
        "explore",
        "--type",
        "C",
        "--rank",
        "2",
        "--word",
        "2 1 2",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn normalize_reports_family_and_word() {
    let out = qck(&["normalize", "--json", "--word", "1 -1 1 -1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["family"], serde_json::json!("12bar1"));
    assert_eq!(v["word"], serde_json::json!([1, -1]));
}

#[test]
fn classify_isolated_word() {
    let out = qck(&[
        "classify", "--json", "--type", "C", "--rank", "4", "--word", "1 2 -2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["isolated"], serde_json::json!(true));
    assert_eq!(v["commutative"], serde_json::json!(true));
    assert_eq!(v["idempotent"], serde_json::json!(false));
    assert_eq!(v["inv"], serde_json::json!([1, 1, 0, 0]));
}

#[test]
fn identity_counterexample_exit_code() {
    let out = qck(&[
        "identity", "--json", "--type", "C", "--rank", "3", "--lhs", "xyxyxy", "--rhs", "xyyxxy",
        "--max-len", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["holds_up_to_bound"], serde_json::json!(false));
    assert_eq!(v["counterexample"]["x"], serde_json::json!([1]));
    assert_eq!(v["counterexample"]["y"], serde_json::json!([2]));
}

#[test]
fn identity_holds_within_bound() {
    let out = qck(&[
        "identity", "--type", "C", "--rank", "2", "--lhs", "xyxyxy", "--rhs", "xyyxxy",
        "--max-len", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validate_named_types() {
    for (kind, rank) in [("A", "4"), ("C", "3")] {
        let out = qck(&["validate", "--json", "--type", kind, "--rank", rank]);
        assert_eq!(out.status.code(), Some(0), "validate {kind} {rank}");
        let v = stdout_json(&out);
        assert_eq!(v["root_axioms"], serde_json::json!(true));
        assert_eq!(v["quasicrystal"], serde_json::json!(true));
        assert_eq!(v["seminormal"], serde_json::json!(true));
    }
}

#[test]
fn embed_commands() {
    let out = qck(&["embed", "--json", "--kind", "a2c", "--rank", "3", "--word", "1 2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out)["word"],
        serde_json::json!([1, 2, 3, -3, 3, -3])
    );

    let out = qck(&["embed", "--json", "--kind", "c2c", "--rank", "3", "--word", "1 -2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out)["word"],
        serde_json::json!([2, 1, -1, -3, 1, -1])
    );
}

#[test]
fn parse_errors_exit_2() {
    let out = qck(&[
        "congruent", "--type", "C", "--rank", "2", "--left", "5", "--right", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = qck(&["congruent", "--type", "B", "--rank", "2", "--left", "1", "--right", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_qck"))
        .args(["explore", "--type", "C", "--rank", "2", "--word", "1 2 1"])
        .env("QCK_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_data_exits_4() {
    let out = qck(&["normalize", "--rank", "3", "--word", "1 2"]);
    assert_eq!(out.status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = qck(&["validate", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn validate_explicit_table_file() {
    let table = quasicrystals::qc_core::standard_c(2).unwrap().to_json();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    std::fs::write(&path, table).unwrap();
    let out = qck(&["validate", "--json", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["quasicrystal"], serde_json::json!(true));
    assert_eq!(v["seminormal"], serde_json::json!(true));
}
