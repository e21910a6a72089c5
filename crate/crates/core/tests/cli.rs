use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use plueckerlab::cli::files::WebFile;
use plueckerlab::cli::Report;
use plueckerlab::congruence::SkewWeb;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plueckerlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn fixture(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(rel).to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("plueckerlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_fixture_file() {
    let out = run(&["classify", &fixture("webs/af-k1.json"), "--json"]);
    let v = json(&out);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["label"]["kind"], "split_g35");
    assert_eq!(v["result"]["focal"]["hilbert"]["coeffs"], serde_json::json!(["1", "11/6", "2", "7/6"]));
    let text = run(&["classify", "af-k1"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("residual"));
}

#[test]
fn reports_round_trip() {
    let out = run(&["hilbert", "af-case1", "--ideal", "residual", "--json"]);
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.input, "fixture:af-case1");
    assert_eq!(r.result["polynomial"], "t^3 + 3*t^2 + 2");
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn same_input_same_digest() {
    let a = json(&run(&["pfaffian", &fixture("webs/af-case1.json"), "--json"]));
    let b = json(&run(&["pfaffian", &fixture("webs/af-case1.json"), "--json"]));
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["result"]["quadric_rank"], 4);
}

#[test]
fn foci_modes() {
    let v = json(&run(&["foci", "wave", "--point", "(1:3:5:2)", "--json"]));
    assert_eq!(v["result"]["foci"]["real_roots"].as_array().unwrap().len(), 2);
    let v = json(&run(&["foci", "af-k1", "--pencil", "--point", "(0:0:1:2:3:4)", "--json"]));
    assert_eq!(v["result"]["residual_curve_degree"], 3);
    let seeded = |s: &str| json(&run(&["foci", "palatini-generic", "--seed", s, "--json"]))["result"].clone();
    assert_eq!(seeded("4"), seeded("4"));
}

#[test]
fn temple_verdicts() {
    let v = json(&run(&["temple", &fixture("flux/wave.json"), "--json", "--samples", "8"]));
    assert_eq!(v["result"]["temple"]["verdict"]["verdict"], "temple_at_samples");
    let v = json(&run(&["temple", "burgers", "--json"]));
    assert_eq!(v["result"]["temple"]["verdict"]["verdict"], "not_temple");
    let f = scratch("samples.json", r#"{"m": 2, "flux": ["-u2", "-u1"], "samples": [[1, "1/2"], [0, 3]]}"#);
    let v = json(&run(&["temple", f.to_str().unwrap(), "--json"]));
    assert_eq!(v["result"]["samples"].as_array().unwrap().len(), 2);
}

#[test]
fn validation_errors_exit_2() {
    let bad = scratch("bad.json", r#"{"n": 3, "matrices": [[[0, 1], [-1, 0]]]}"#);
    assert_eq!(run(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["classify", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "wave"]).status.code(), Some(2));
    assert_eq!(run(&["foci", "wave", "--point", "(1:2"]).status.code(), Some(2));
    assert_eq!(run(&["temple", "wave", "--samples", "0"]).status.code(), Some(2));
    let e = scratch("empty.json", r#"{"m": 1, "flux": ["u1^2"], "samples": []}"#);
    assert_eq!(run(&["temple", e.to_str().unwrap()]).status.code(), Some(2));
    // focal point without --pencil
    let out = run(&["foci", "af-k1", "--point", "(0:0:1:2:3:4)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn unsupported_exits_3() {
    let w = WebFile::from_web(&SkewWeb::random(6, 1, 3), None, None).to_json();
    let f = scratch("p6.json", &w);
    assert_eq!(run(&["classify", f.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["pfaffian", f.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn thread_cap() {
    let out = bin().args(["hilbert", "palatini-generic", "--json"]).env("PLUECKERLAB_THREADS", "1").output().unwrap();
    assert_eq!(json(&out)["result"]["hilbert"]["degree"], 7);
    let out = bin().args(["hilbert", "wave"]).env("PLUECKERLAB_THREADS", "zero").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn checked_in_fixtures_match_builtins() {
    for f in plueckerlab::fixtures::corpus() {
        let text = std::fs::read_to_string(fixture(&format!("webs/{}.json", f.name))).unwrap();
        assert_eq!(WebFile::parse(&text).unwrap().to_web().unwrap(), f.web, "{}", f.name);
    }
}
