#![cfg(feature = "cli")]

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidhooks")).args(args).env_remove("BRAIDHOOKS_CAP").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn diamond_file() -> PathBuf {
    let path = std::env::temp_dir().join(format!("braidhooks-diamond-{}.txt", std::process::id()));
    std::fs::write(&path, "0 < a < 1\n0 < b < 1\n").unwrap();
    path
}

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate", "--shape", "right:4,3,2,1"])["count"], 12);
    assert_eq!(json(&["enumerate", "--class-of-word", "1,2,3,4,1,2,3,1,2,1", "--rank", "5"])["count"], 12);
    assert_eq!(json(&["enumerate", "--shape", "right:1"])["count"], 1);
    assert_eq!(json(&["enumerate", "--reduced-words", "4"])["count"], 16);
    let table = run(&["enumerate", "--shape", "right:5,2,1"]);
    assert!(String::from_utf8(table.stdout).unwrap().ends_with("count 2\n"));
}

#[test]
fn verify_examples() {
    let reiner = json(&["verify", "reiner", "--n", "4"]);
    assert_eq!(reiner["pass"], true);
    assert_eq!(reiner["checks"][0]["details"]["words"], 16);
    assert_eq!(reiner["checks"][0]["details"]["braid_moves"], 16);
    let hooks = json(&["verify", "braid-hooks", "--shape", "right:5,2,1"]);
    assert_eq!(hooks["checks"][0]["details"]["tableaux"], 2);
    assert_eq!(hooks["checks"][0]["details"]["hooks"], 2);
    let half = json(&["verify", "half-right", "--shape", "5,3,1"]);
    assert_eq!(half["pass"], true);
    assert_eq!(half["checks"][0]["details"]["expected"], "1/2");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "skew-balance"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "braid-hooks", "--shape", "right:2,2"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "fermat"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--shape", "right:6,5,4,3,2,1", "--cap", "100"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_braidhooks"))
        .args(["enumerate", "--shape", "right:4,3,2,1"])
        .env("BRAIDHOOKS_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn orbit_reports() {
    let report = json(&["orbits", "--shape", "right:4,3,2,1", "--group", "dihedral", "--stat", "braid-hooks"]);
    assert_eq!(report["homomesic"], true);
    for orbit in report["orbits"].as_array().unwrap() {
        assert_eq!(orbit["average"], "1/1");
    }
    let path = diamond_file();
    let poset =
        json(&["orbits", "--poset", path.to_str().unwrap(), "--ideal", "0", "--group", "dihedral", "--stat", "descents"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(poset["orbits"][0]["average"], "1/1");
    let sampled = json(&["orbits", "--shape", "right:7,6,5,4,3,2,1", "--group", "gyration", "--sample", "100", "--seed", "1"]);
    assert_ne!(sampled["witness"]["average"], "1/1");
    let again = json(&["orbits", "--shape", "right:7,6,5,4,3,2,1", "--group", "gyration", "--sample", "100", "--seed", "1"]);
    assert_eq!(sampled, again);
}

#[test]
fn window_and_csv() {
    let window = json(&["window", "--word", "1231423121", "--rank", "5"]);
    assert_eq!(window["preimage"]["k"], 5);
    assert_eq!(window["preimage"]["word"], "1231214321");
    assert_eq!(window["rows"][3]["a"], 1);
    let csv = run(&["window", "--word", "1231423121", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("i,word,a,c,diff"));
    assert!(text.contains("5,1231214321,1,1,0"));
}

#[test]
fn graph_and_heap() {
    let graph = json(&["graph", "--n", "4"]);
    assert_eq!(graph["vertices"].as_array().unwrap().len(), 16);
    let dot = String::from_utf8(run(&["graph", "--n", "3", "--dot"]).stdout).unwrap();
    assert!(dot.starts_with("graph reduced_words {"));
    let heap = json(&["heap", "--word", "1,2,1", "--shape", "right:2,1"]);
    assert_eq!(heap["heap"]["covers"].as_array().unwrap().len(), 2);
    assert!(heap["tableau"].is_object());
}
