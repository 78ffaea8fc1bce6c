use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use praxkit_core::fixtures;
use serde_json::Value;

fn praxkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_praxkit")).args(args).output().expect("praxkit runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_rel(dir: &Path, name: &str, rel: &praxkit_core::BinRel) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(&rel.to_json()).unwrap()).unwrap();
    p
}

fn labels(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn approx_reproduces_the_worked_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_rel(dir.path(), "p.json", &fixtures::worked_relation());
    let p = p.to_str().unwrap();
    let v = json_of(&praxkit(&["approx", p, "--set", "a,h,f", "--ops", "l,lo"]));
    let mut l = labels(&v["approximations"]["l"]);
    l.sort();
    assert_eq!(l, ["a", "f", "h"]);
    let mut lo = labels(&v["approximations"]["lo"]);
    lo.sort();
    assert_eq!(lo, ["a", "f"]);
    let v = json_of(&praxkit(&["approx", p, "--set", "l", "--ops", "l,lo"]));
    assert!(labels(&v["approximations"]["l"]).is_empty());
    assert_eq!(labels(&v["approximations"]["lo"]), ["l"]);
}

#[test]
fn classify_c3() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_rel(dir.path(), "c3.json", &fixtures::c3());
    let v = json_of(&praxkit(&["classify", p.to_str().unwrap()]));
    assert_eq!(v["reflexive"], true);
    assert_eq!(v["prax"], true);
    assert_eq!(v["transitive"], false);
}

#[test]
fn objects_lists_classes_and_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_rel(dir.path(), "c3.json", &fixtures::c3());
    let v = json_of(&praxkit(&["objects", p.to_str().unwrap(), "--atoms"]));
    let members: usize = v["classes"].as_array().unwrap().iter().map(|c| c["members"].as_array().unwrap().len()).sum();
    assert_eq!(members, 8);
    assert_eq!(v["atomic"], true);
    assert!(!v["atoms"].as_array().unwrap().is_empty());
}

#[test]
fn deps_reports_degree_and_pn() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_rel(dir.path(), "c3.json", &fixtures::c3());
    let v = json_of(&praxkit(&["deps", p.to_str().unwrap(), "--x", "0,1", "--y", "0,1", "--nu", "delta_l"]));
    assert!(v["aggregate"].is_array());
    assert!(v.get("pn_dependent").is_some_and(Value::is_boolean));
}

#[test]
fn gen_is_seeded() {
    let a = praxkit(&["gen", "--n", "5", "--constraint", "prax", "--seed", "7", "--count", "3"]);
    let b = praxkit(&["gen", "--n", "5", "--constraint", "prax", "--seed", "7", "--count", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let rels: Vec<praxkit_core::RelationJson> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(rels.len(), 3);
    assert!(rels.iter().all(|r| r.to_relation().unwrap().is_prax()));
}

#[test]
fn verify_is_deterministic_without_runtime() {
    let args = ["verify", "--suite", "APP-*,PRB-*", "--n-max", "3", "--samples", "20", "--seed", "42", "--no-runtime"];
    let a = praxkit(&args);
    let b = praxkit(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["runtime_ms"] == 0));
}

#[test]
fn verify_exit_codes() {
    let ok = praxkit(&["verify", "--suite", "APP-BI,GRN-OTO", "--n-max", "3", "--samples", "0"]);
    assert_eq!(ok.status.code(), Some(0));
    let red = praxkit(&["verify", "--suite", "APP-SHARP-L", "--n-max", "3", "--samples", "0"]);
    assert_eq!(red.status.code(), Some(1));
    let none = praxkit(&["verify", "--suite", "NO-SUCH-CLAIM"]);
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn text_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let st = praxkit(&["verify", "--suite", "FIX-*", "--format", "text", "--out", out.to_str().unwrap()]);
    assert_eq!(st.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("FIX-APPROX"));
    assert!(text.contains("ok=true"));
}

#[test]
fn missing_file_is_an_error() {
    let out = praxkit(&["classify", "/nonexistent/rel.json"]);
    assert_eq!(out.status.code(), Some(2));
}
