use std::path::PathBuf;
use std::process::{Command, Output};

use quiver_cover::report::{Claim, Verdict, VerificationReport};
use serde_json::Value;

fn input(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../inputs");
    root.join(name).to_string_lossy().into_owned()
}

fn qcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcover")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn validate_accepts_nakayama() {
    let out = qcover(&["validate", "--input", &input("n32.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["dimension"], 6);
}

#[test]
fn validate_rejects_inhomogeneous_relation() {
    let out = qcover(&["validate", "--input", &input("bad.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "InhomogeneousRelation");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qcover(&["validate"]).status.code(), Some(2));
    assert_eq!(qcover(&["check", "--input", &input("n32.json"), "--claim", "Nope"]).status.code(), Some(2));
    assert_eq!(qcover(&["suite", "--input", &input("n32.json")]).status.code(), Some(2));
    assert_eq!(qcover(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qcover(&["validate", "--input", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn check_main1_passes_and_round_trips() {
    let out = qcover(&["check", "--input", &input("n32.json"), "--claim", "Main1", "--n", "1", "--window", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.claim, Claim::Main1);
    assert_eq!(report.pass, Verdict::Pass);
    assert_eq!(report.to_json_string() + "\n", text);
}

#[test]
fn exit_code_follows_verdict() {
    let out = qcover(&["check", "--input", &input("kronecker.json"), "--claim", "BonGab", "--window", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["pass"], "not-applicable");
    let out = qcover(&["check", "--input", &input("n32.json"), "--claim", "PnPushdown", "--window", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["pass"], "indeterminate");
}

#[test]
fn reports_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("qcover-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let file = dir.join(name);
        let args = ["suite", "--input", &input("n32.json"), "--claim", "Corres", "--claim", "TiltingFinite"];
        let out = qcover(&[&args[..], &["--window", "6", "--seed", "7", "--out", file.to_str().unwrap()]].concat());
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(file).unwrap()
    };
    let (a, b) = (run("a.json"), run("b.json"));
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    assert_eq!(v["summary"], "summary: 2 claims, 2 pass, 0 fail, 0 not-applicable, 0 indeterminate");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn indecs_lists_six_modules() {
    let v = json(&qcover(&["indecs", "--input", &input("n32.json")]));
    let list = v["indecomposables"].as_array().unwrap();
    assert_eq!(list.len(), 6);
    assert_eq!(list.iter().filter(|m| m["projective"] == true).count(), 3);
}

#[test]
fn orbit_and_pushdown_agree() {
    let args = ["--input", &input("n32.json"), "--window", "6"];
    let orbits = json(&qcover(&[&["orbit"], &args[..]].concat()));
    assert_eq!(orbits["orbits"].as_array().unwrap().len(), 6);
    let out = qcover(&[&["pushdown"], &args[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bijective"], true);
    let mut hits: Vec<u64> =
        v["orbits"].as_array().unwrap().iter().map(|o| o["base_index"].as_u64().unwrap()).collect();
    hits.sort();
    assert_eq!(hits, vec![0, 1, 2, 3, 4, 5]);
}

#[test]
fn orbit_with_tiny_window_is_indeterminate() {
    let out = qcover(&["orbit", "--input", &input("n32.json"), "--window", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumerate_tilting_counts() {
    for (file, count) in [("n32.json", 14), ("a3.json", 14), ("dual_numbers.json", 2)] {
        let v = json(&qcover(&["enumerate-tilting", "--input", &input(file)]));
        assert_eq!(v["count"], count, "{file}");
    }
}

#[test]
fn text_format_is_line_oriented() {
    let out = qcover(&["indecs", "--input", &input("a3.json"), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.ends_with("6 indecomposables\n"));
}
