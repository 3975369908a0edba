//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn weakodd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakodd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn weakodd_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakodd"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("weakodd-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

const BAD_TOURNAMENT: &str = "digraph n=5\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 0\n3 4\n";

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_reports_class_index_and_defect() {
    let file = write_temp("analyze", BAD_TOURNAMENT);
    let out = weakodd(&["analyze", file.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("class = tournament"));
    assert!(text.contains("index = 3"));
    assert!(text.contains("defect = 1"));
    assert!(text.contains("case = nontrivial and even with exactly one peripheral vertex"));
    assert!(text.contains("oracle-index = 3"));
    assert!(text.contains("oracle-defect = 1"));
}

#[test]
fn infeasible_color_requests_exit_2() {
    let file = write_temp("color2", BAD_TOURNAMENT);
    let out = weakodd(&["color", file.to_str().unwrap(), "-k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("index is 3"));
    assert!(err.contains("peripheral"));
}

#[test]
fn feasible_color_requests_verify() {
    let file = write_temp("color3", BAD_TOURNAMENT);
    let out = weakodd(&["color", file.to_str().unwrap(), "-k", "3"]);
    assert!(out.status.success());
    let report = write_temp("color3-report", &stdout_of(&out));
    let verify = weakodd(&[
        "verify",
        file.to_str().unwrap(),
        report.to_str().unwrap(),
    ]);
    assert!(verify.status.success(), "witness must re-verify");
    assert!(stdout_of(&verify).contains("witness = confirmed"));
}

#[test]
fn defect_witness_reverifies_with_its_failing_set() {
    let file = write_temp("defect", BAD_TOURNAMENT);
    let out = weakodd(&["defect", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("defect = 1"));
    assert!(text.contains("failing = 4"));
    let report = write_temp("defect-report", &text);
    let verify = weakodd(&[
        "verify",
        file.to_str().unwrap(),
        report.to_str().unwrap(),
    ]);
    assert!(verify.status.success());
}

#[test]
fn cover_produces_singletons_on_two_colorable_tournaments() {
    let file = write_temp("cover", "digraph n=3\n0 1\n0 2\n1 2\n");
    let out = weakodd(&["cover", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("witness = covering"));
    assert!(text.contains("doubly-colored = 0"));
    assert!(!text.contains("1,2"));
    let report = write_temp("cover-report", &text);
    let verify = weakodd(&[
        "verify",
        file.to_str().unwrap(),
        report.to_str().unwrap(),
    ]);
    assert!(verify.status.success());
}

#[test]
fn cover_rejects_non_tournaments() {
    let file = write_temp("cover-digon", "digraph n=2\n0 1\n1 0\n");
    let out = weakodd(&["cover", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_output_pipes_back_into_analyze() {
    let out = weakodd(&[
        "gen",
        "--class",
        "tournament",
        "--n",
        "5",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    let doc = stdout_of(&out);
    assert!(doc.starts_with("digraph n=5"));
    let again = weakodd(&["gen", "--class", "tournament", "--n", "5", "--seed", "42"]);
    assert_eq!(doc, stdout_of(&again), "generation is reproducible");

    let file = write_temp("gen", &doc);
    let analyzed = weakodd(&["analyze", file.to_str().unwrap()]);
    assert!(analyzed.status.success());
    assert!(stdout_of(&analyzed).contains("class = tournament"));
}

#[test]
fn gen_extended_tournament_documents_round_trip() {
    let out = weakodd(&[
        "gen",
        "--class",
        "et",
        "--n",
        "4",
        "--seed",
        "7",
        "--sizes",
        "1,1,1,2",
    ]);
    assert!(out.status.success());
    let doc = stdout_of(&out);
    assert!(doc.starts_with("et n=4 sizes=1,1,1,2"));
    let file = write_temp("gen-et", &doc);
    let analyzed = weakodd(&["analyze", file.to_str().unwrap()]);
    assert!(analyzed.status.success());
    assert!(stdout_of(&analyzed).contains("class = extended-tournament"));
}

#[test]
fn malformed_files_exit_1() {
    let file = write_temp("loop", "digraph n=3\n0 0\n");
    let out = weakodd(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn oracle_budget_refusal_exits_3() {
    // 5 allowed arcs against a 10-arc tournament
    let file = write_temp("budget", BAD_TOURNAMENT);
    let out = weakodd_with_env(
        &["analyze", file.to_str().unwrap(), "--oracle"],
        "WEAKODD_ORACLE_MAX_ARCS",
        "5",
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dot_export_writes_deterministic_files() {
    let file = write_temp("dot-src", "digraph n=3\n0 1\n1 2\n2 0\n");
    let dot_path = std::env::temp_dir().join(format!("weakodd-cli-{}.dot", std::process::id()));
    let out = weakodd(&[
        "analyze",
        file.to_str().unwrap(),
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let first = std::fs::read_to_string(&dot_path).unwrap();
    assert_eq!(first.matches("style=solid").count(), 3);
    let out = weakodd(&[
        "analyze",
        file.to_str().unwrap(),
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(first, std::fs::read_to_string(&dot_path).unwrap());
}

#[test]
fn reduced_selftest_passes_and_prints_criteria() {
    let out = weakodd(&["selftest", "--max-n", "3", "--samples", "10"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.matches(": PASS").count(), 6);
}
