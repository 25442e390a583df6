use std::process::{Command, Output};

use serde_json::Value;

fn mvtrop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvtrop"))
        .args(args)
        .env_remove("MVTROP_DEFAULT_BOUND")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn exit_codes() {
    assert_eq!(mvtrop(&["axioms", "--algebra", "chain:3"]).status.code(), Some(0));
    assert_eq!(mvtrop(&["tautology", "x (+) ~x", "--algebra", "chain:5"]).status.code(), Some(0));
    assert_eq!(mvtrop(&["tautology", "x \\/ ~x", "--algebra", "chain:5"]).status.code(), Some(1));
    assert_eq!(mvtrop(&["theta", "--algebra", "chain:"]).status.code(), Some(2));
    assert_eq!(mvtrop(&["gp", "--group", "Z"]).status.code(), Some(2));
    assert_eq!(mvtrop(&["gp", "--group", "Z", "--prime", "4"]).status.code(), Some(3));
    assert_eq!(mvtrop(&["check-eq", "x = x", "--algebra", "interval"]).status.code(), Some(3));
    assert_eq!(mvtrop(&["theta", "--algebra", "chang", "--bound", "0"]).status.code(), Some(3));
}

#[test]
fn errors_go_to_stderr() {
    let out = mvtrop(&["eval", "x (.) (y", "--algebra", "chain:3", "--assign", "x=0,y=1"]);
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: parse error at "), "{err}");
}

#[test]
fn unbound_variable_is_a_domain_error() {
    let out = mvtrop(&["eval", "x (+) y", "--algebra", "chain:3", "--assign", "x=1/2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_mvtrop"))
        .args(["theta", "--algebra", "chang"])
        .env("MVTROP_DEFAULT_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(json(&out)["elements"], serde_json::json!(["(0,0)", "(0,1)", "(0,2)", "(1,0)"]));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_mvtrop"))
        .args(["theta", "--algebra", "chang", "--bound", "1"])
        .env("MVTROP_DEFAULT_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(json(&flag_wins)["bound"], 1);
    assert_eq!(json(&mvtrop(&["theta", "--algebra", "chang"]))["bound"], 8);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("mvtrop-out-{}.json", std::process::id()));
    let out = mvtrop(&["export", "--algebra", "chain:2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written["elements"], serde_json::json!(["0", "1"]));
}

#[test]
fn seeds_are_reproducible() {
    let args = ["axioms", "--algebra", "interval", "--samples", "50", "--seed", "9"];
    assert_eq!(mvtrop(&args).stdout, mvtrop(&args).stdout);
    let flat = ["flat-check", "--group", "Z[1/3]", "--samples", "80", "--seed", "5"];
    let a = json(&mvtrop(&flat));
    assert_eq!(a, json(&mvtrop(&flat)));
    assert_eq!(a["verdict"], "valid");
}

#[test]
fn pretty_output() {
    let out = mvtrop(&["--pretty", "classify", "--group", "Q"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "group: Q\nregularity: regularly_dense\n");
    let report = mvtrop(&["vc-member", "--algebra", "chain:4", "--pretty"]);
    assert_eq!(report.status.code(), Some(1));
    assert!(String::from_utf8(report.stdout).unwrap().starts_with("counterexample"));
}

#[test]
fn gamma_with_negative_and_lex_units() {
    assert_eq!(mvtrop(&["gamma", "--group", "Z", "--unit", "-1"]).status.code(), Some(3));
    let out = mvtrop(&["gamma", "--group", "lex:Z", "--unit", "(1,0)"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["algebra"], "chang");
}

#[test]
fn theta_pt_functoriality() {
    let out = mvtrop(&["theta-pt", "--group", "chi:3^2", "--to", "Q", "--bound", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "valid_up_to_bound");
}

#[test]
fn glue_keeps_the_boolean_skeleton() {
    let out = mvtrop(&["glue", "chain:2", "chang", "--bound", "1"]);
    let v = json(&out);
    assert_eq!(v["boolean_part"].as_array().unwrap().len(), 2);
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
}
