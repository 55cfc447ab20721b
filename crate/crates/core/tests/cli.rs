use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_ordlen");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn canonical_of_pb() {
    let out = run(&["canonical", "--input", &fixture("pb")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["magnitude"], 5);
    assert_eq!(v["lengths"], serde_json::json!([0, 0, 0, 1, 2, 1, 1]));
}

#[test]
fn all_encodings_agree() {
    let a = run(&["canonical", "--input", &fixture("pb")]).stdout;
    let b = run(&["canonical", "--input", &fixture("pb_intervals")]).stdout;
    let c = run(&["canonical", "--json", r#"{"ascent":[0,1,2,1,0,2,3]}"#]).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn two_plus_two_is_rejected_with_certificate() {
    let out = run(&["validate", "--input", &fixture("twotwo")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["certificate"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn malformed_input_exits_one() {
    assert_eq!(run(&["canonical", "--json", "{\"bogus\": 1}"]).status.code(), Some(1));
    assert_eq!(run(&["canonical", "--json", "{"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    let out = run(&["member", "--input", &fixture("pb"), "--rho", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn non_member_exits_two() {
    let out = run(&["member", "--input", &fixture("pb"), "--rho", "0,0,0,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["member"], false);
    let row = serde_json::json!({"gamma": 2, "A": [4], "B": [5, 6]});
    assert!(v["violated"].as_array().unwrap().contains(&row));
    let out = run(&["extend", "--input", &fixture("pb"), "--rho", "0,0,0,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["feasible"], false);
}

#[test]
fn caps_exit_three() {
    let out = run(&["cycles", "--input", &fixture("pb"), "--max-cycles", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["hilbert", "--input", &fixture("pc"), "--max-extenders", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hilbert_of_pc() {
    let out = run(&["hilbert", "--input", &fixture("pc")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["basis"].as_array().unwrap().len(), 11);
    let table = run(&["hilbert", "--input", &fixture("pc"), "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn berge_report_of_pd() {
    let out = run(&["berge", "--input", &fixture("pd")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["clique_number"], v["chromatic_number"]);
}

#[test]
fn dot_outputs() {
    let out = run(&["keygraph", "--input", &fixture("pb"), "--format", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 15);
    let out = run(&["extgraph", "--input", &fixture("pd"), "--format", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 78);
    assert_eq!(run(&["canonical", "--input", &fixture("pb"), "--format", "dot"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for cmd in ["canonical", "keygraph", "cycles", "inequalities", "extenders", "hilbert", "extgraph", "facets"] {
        let a = run(&[cmd, "--input", &fixture("pc")]);
        let b = run(&[cmd, "--input", &fixture("pc")]);
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
    let a = run(&["random", "--n", "6", "--seed", "11"]).stdout;
    assert_eq!(a, run(&["random", "--n", "6", "--seed", "11"]).stdout);
}

#[test]
fn random_output_round_trips() {
    let text = String::from_utf8(run(&["random", "--n", "6", "--seed", "3"]).stdout).unwrap();
    let out = run(&["validate", "--json", &text]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let out = run(&["canonical", "--input", &fixture("pb"), "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&["canonical", "--input", &fixture("pb")]).stdout);
}
