use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn lefschetz(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).current_dir(dir).output().unwrap()
}

fn workspace(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_passing_word_exits_zero() {
    let dir = workspace(&[("b.lfw", "genus: 2\nword: B\n")]);
    let out = lefschetz(dir.path(), &["analyze", "b.lfw", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["complete"], true);
    assert_eq!(json["sigma"], -18);
    assert_eq!(json["double_cover_base"], "odd");
    assert!(out.stderr.is_empty());
}

#[test]
fn relation_failure_reports_verdicts_and_exits_two() {
    let dir = workspace(&[("e.lfw", "genus: 1\nword: (c1 c2)^5\n")]);
    let out = lefschetz(dir.path(), &["analyze", "e.lfw", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["complete"], false);
    assert_eq!(json["verdicts"][0]["name"], "global_relation");
    assert_eq!(json["verdicts"][0]["status"], "fail");
    assert!(json.get("sigma").is_none());
}

#[test]
fn failing_verdict_exits_two() {
    let dir = workspace(&[("e1.lfw", "genus: 1\nword: E(1)\n")]);
    let out = lefschetz(dir.path(), &["analyze", "e1.lfw"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAIL wp_positive"));
}

#[test]
fn input_errors_exit_one() {
    let dir = workspace(&[("bad.lfw", "genus: 2\nword: c1 c6\n")]);
    let out = lefschetz(dir.path(), &["analyze", "bad.lfw"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 10"), "{err}");
    assert!(err.contains("max 5"));

    assert_eq!(lefschetz(dir.path(), &["analyze", "missing.lfw"]).status.code(), Some(1));
    assert_eq!(lefschetz(dir.path(), &["analyze"]).status.code(), Some(1));
    assert_eq!(lefschetz(dir.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(lefschetz(dir.path(), &["generate", "--family", "A", "--genus", "3"]).status.code(), Some(1));
}

#[test]
fn check_rejects_all_separating_word() {
    let dir = workspace(&[("torelli.lfw", "genus: 2\nword: s1 s1 s1 s1 s1\n"), ("b.lfw", "genus: 2\nword: B\n")]);
    let out = lefschetz(dir.path(), &["check", "torelli.lfw"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAIL torelli: NotRealizable"));
    assert_eq!(lefschetz(dir.path(), &["check", "b.lfw"]).status.code(), Some(0));
}

#[test]
fn generate_and_sum() {
    let dir = tempfile::tempdir().unwrap();
    let gen = lefschetz(dir.path(), &["generate", "--family", "A", "--power", "2", "-o", "a2.lfw"]);
    assert_eq!(gen.status.code(), Some(0));
    assert!(lefschetz(dir.path(), &["generate", "--family", "H", "--genus", "3", "-o", "h3.lfw"]).status.success());
    let h3 = lefschetz(dir.path(), &["analyze", "h3.lfw", "--format", "json", "--assume-hyperelliptic"]);
    let json: Value = serde_json::from_slice(&h3.stdout).unwrap();
    assert_eq!(json["sigma"], -32);
    assert!(json["verdicts"].as_array().unwrap().iter().any(|v| v["name"] == "endo_equality" && v["status"] == "pass"));

    let sum = lefschetz(dir.path(), &["sum", "a2.lfw", "a2.lfw"]);
    assert_eq!(sum.status.code(), Some(0));
    assert!(stdout(&sum).starts_with("genus: 2\nword: "));
    assert_eq!(lefschetz(dir.path(), &["sum", "a2.lfw", "h3.lfw"]).status.code(), Some(1));
}

#[test]
fn multiple_files_keep_input_order() {
    let dir = workspace(&[("c.lfw", "genus: 2\nword: C\n"), ("a.lfw", "genus: 2\nword: A\n")]);
    let out = lefschetz(dir.path(), &["analyze", "c.lfw", "a.lfw", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("file,complete,genus"));
    assert!(lines[1].starts_with("c.lfw,true,2,40"));
    assert!(lines[2].starts_with("a.lfw,true,2,20"));

    let json = lefschetz(dir.path(), &["analyze", "c.lfw", "a.lfw", "--format", "json"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[0]["file"], "c.lfw");
    assert_eq!(v[1]["sigma"], -12);
}

#[test]
fn selftest_passes() {
    let out = lefschetz(Path::new("."), &["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 5);
}
