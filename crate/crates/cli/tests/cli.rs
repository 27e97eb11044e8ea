use std::path::PathBuf;
use std::process::{Command, Output};

fn alterna(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alterna")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("alterna-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn one_parameter_coefficients_for_m5() {
    let o = alterna(&["coeffs", "--m", "5", "--one-param"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a5 = 1\na3 = 3*b0^2\na1 = b0^4 + b0^2\n");
}

#[test]
fn two_parameter_coefficients_for_m4() {
    let o = alterna(&["coeffs", "--m", "4"]);
    assert_eq!(stdout(&o), "a4 = 1\na2 = 2*b0*b1\n");
}

#[test]
fn odd_label_needs_one_parameter() {
    assert_eq!(alterna(&["coeffs", "--m", "5"]).status.code(), Some(2));
    assert_eq!(alterna(&["dihedral", "--m", "3"]).status.code(), Some(2));
}

#[test]
fn alpha_table_json() {
    let o = alterna(&["--json", "coeffs", "--m", "2", "--alpha"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 2);
    assert!(v["entries"].as_array().is_some_and(|e| !e.is_empty()));
}

#[test]
fn generating_function_check_passes() {
    let o = alterna(&["coeffs", "--check-gen", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn edge_hecke_for_a2() {
    let o = alterna(&["present", "--input", "A2", "--kind", "edge-hecke"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("y0_1"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("= 0")).count(), 1, "{out}");
}

#[test]
fn unknown_kind_and_type_are_usage_errors() {
    assert_eq!(alterna(&["present", "--input", "A2", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(alterna(&["present", "--input", "Q7", "--kind", "coxeter"]).status.code(), Some(2));
    assert_eq!(alterna(&["present", "--input", "A3", "--kind", "typeA-braid"]).status.code(), Some(0));
    assert_eq!(alterna(&["present", "--input", "B3", "--kind", "typeA-braid"]).status.code(), Some(2));
}

#[test]
fn json_and_text_conflict() {
    assert_eq!(alterna(&["--json", "--text", "info", "--input", "A2"]).status.code(), Some(2));
}

#[test]
fn invalid_matrix_file_is_rejected() {
    let path = temp_file("bad.json", r#"{"rank": 2, "matrix": [[1, 3], [2, 1]]}"#);
    let o = alterna(&["info", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("(0,1)"), "{err}");

    let path = temp_file("one.json", r#"[[1, 1], [1, 1]]"#);
    assert_eq!(alterna(&["info", "--input", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn matrix_file_is_accepted() {
    let path = temp_file("a3.json", r#"{"rank": 3, "matrix": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}"#);
    let o = alterna(&["--json", "info", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 3);
    assert_eq!(v["parameter_classes"], serde_json::json!([[0, 1, 2]]));
}

#[test]
fn info_reports_added_edges_for_disconnected_graphs() {
    let o = alterna(&["--json", "info", "--input", "I2(2)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["added_edges"], serde_json::json!([[0, 1]]));
    assert_eq!(v["parameter_classes"], serde_json::json!([[0], [1]]));
}

#[test]
fn presentation_json_feeds_rs() {
    let o = alterna(&["--json", "present", "--input", "B3", "--kind", "coxeter"]);
    assert_eq!(o.status.code(), Some(0));
    let path = temp_file("b3.json", &stdout(&o));
    let o = alterna(&["--json", "rs", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // R_i for every generator, R'_i for the non-root ones, and twice the relations.
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_eq!(v["relations"].as_array().unwrap().len(), 12);

    let o = alterna(&["--json", "rs", "--input", path.to_str().unwrap(), "--simplify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["R1", "R2"]));
}

#[test]
fn rs_with_explicit_character() {
    let o = alterna(&["--json", "present", "--input", "A2", "--kind", "braid"]);
    let pres = temp_file("braid-a2.json", &stdout(&o));
    let ch = temp_file("char.json", r#"{"g0": -1, "g1": -1}"#);
    let o = alterna(&["rs", "--input", pres.to_str().unwrap(), "--character", ch.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    let bad = temp_file("bad-char.json", r#"{"g0": 3, "g1": -1}"#);
    let o = alterna(&["rs", "--input", pres.to_str().unwrap(), "--character", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dihedral_checks_pass() {
    let o = alterna(&["dihedral", "--m", "4", "--check", "--fuzz", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["coeffs", "braid-presentations", "rs", "remark-iv"] {
        let o = alterna(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
    assert_eq!(alterna(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_dihedral_suite() {
    let o = alterna(&["--json", "verify", "--suite", "dihedral"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["suite"], "dihedral");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn verify_with_custom_corpus() {
    let corpus = temp_file("corpus.json", r#"["A2", "I2(7)", {"name": "X", "rank": 2, "matrix": [[1, 4], [4, 1]]}]"#);
    let o = alterna(&["verify", "--suite", "group-presentations", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("X:"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "present", "--input", "E6", "--kind", "edge-braid"][..],
        &["--json", "verify", "--suite", "rs"][..],
        &["--seed", "7", "dihedral", "--m", "8", "--check", "--eval-mode", "--fuzz", "5"][..],
    ] {
        assert_eq!(stdout(&alterna(args)), stdout(&alterna(args)), "{args:?}");
    }
}
