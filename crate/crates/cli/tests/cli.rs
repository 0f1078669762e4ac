use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn almg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_almg")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json", "--no-timing"];
    all.extend_from_slice(args);
    let out = almg(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out));
    (out.status.code().unwrap(), v)
}

fn model(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let mut all = vec!["model"];
    all.extend_from_slice(args);
    let out = almg(&all);
    assert!(out.status.success(), "{out:?}");
    let path = dir.join(name);
    std::fs::write(&path, out.stdout).unwrap();
    path
}

fn entry<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["entries"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap_or_else(|| panic!("no {name}"))
}

#[test]
fn model_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = model(dir.path(), "b2.alg", &["boolean", "--k", "2"]);
    let (code, doc) = json(&["check", b2.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["command"], "check");
    assert!(doc.get("timing").is_none());

    let zuv = model(dir.path(), "zuv.alg", &["z-uv", "--window", "8"]);
    let (code, doc) = json(&["check", zuv.to_str().unwrap()]);
    assert_eq!(code, 1);
    let a2 = entry(&doc, "axiom2");
    assert_eq!(a2["passed"], false);
    // u is element 0 and v element 1.
    assert_eq!(a2["detail"]["witnesses"][0]["tuple"], serde_json::json!([1, 0]));

    // Dropping axiom2 from the requirements makes the check pass.
    let (code, _) = json(&["check", zuv.to_str().unwrap(), "--require", "lattice,monoid,metric,contractions,axiom4"]);
    assert_eq!(code, 0);
}

#[test]
fn text_report_marks_entries() {
    let dir = tempfile::tempdir().unwrap();
    let zu = model(dir.path(), "zu.alg", &["z-u", "--window", "4"]);
    let out = almg(&["check", zu.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS lattice") && l.contains("skipped")));
    assert!(text.contains("result: pass"));
    assert!(text.contains("time:"));
}

#[test]
fn geometry_and_predicates() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = model(dir.path(), "b2.alg", &["boolean", "--k", "2"]);
    let b2 = b2.to_str().unwrap();
    let (code, doc) = json(&["geometry", b2]);
    assert_eq!(code, 0);
    assert_eq!(entry(&doc, "al_monoid")["passed"], true);

    let (code, doc) = json(&["geometry", b2, "--predicate", "fixty", "1", "2", "3"]);
    assert_eq!(code, 0, "{doc}");

    let chain = model(dir.path(), "c3.alg", &["chain", "--n", "3"]);
    let (code, _) = json(&["geometry", chain.to_str().unwrap(), "--predicate", "M", "0", "2", "1"]);
    assert_eq!(code, 1);
    let out = almg(&["geometry", b2, "--predicate", "nonsense", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn interval_commands() {
    let (code, doc) = json(&["intervals", "ex"]);
    assert_eq!(code, 0);
    assert!(doc.to_string().contains("[2,2]"));
    let (code, doc) = json(&["intervals", "fixty"]);
    assert_eq!(code, 0);
    assert!(doc.to_string().contains("[1,1]∪[2,2]"));
    let (code, doc) = json(&["intervals", "star", "[0,2]", "[1,3]"]);
    assert_eq!(code, 0);
    assert!(doc.to_string().contains("[0,1]∪[2,3]"));

    let out = almg(&["intervals", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("ex") && err.contains("fixty"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = almg(&["search", "--size", "3", "--require", "metric", "--violate", "metric"]);
    assert_eq!(out.status.code(), Some(2));
    let out = almg(&["search", "--size", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = almg(&["check", "/nonexistent/file.alg"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "size 2\nzero 0\nnot a table\n").unwrap();
    let out = almg(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let (code, doc) = json(&["enumerate", "--size", "3", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(entry(&doc, "reverify")["passed"], true);

    let mut files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    let algs: Vec<_> = files.iter().filter(|p| p.extension().is_some_and(|e| e == "alg")).collect();
    assert_eq!(algs.len(), 2);
    assert!(out_dir.join("summary.json").exists());
    // Each written file re-checks as an AL-monoid.
    for f in algs {
        let (code, _) = json(&["check", f.to_str().unwrap()]);
        assert_eq!(code, 0, "{f:?}");
    }
}

#[test]
fn search_finds_an_independence_witness() {
    let (code, doc) = json(&["search", "--size", "3", "--require", "monoid,metric", "--violate", "contractions"]);
    assert_eq!(code, 0);
    assert_eq!(entry(&doc, "reverify")["passed"], true);
    assert_eq!(doc["input"]["size"], 3, "{}", doc["input"]);
}
