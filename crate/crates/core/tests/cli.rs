//! The command-line surface: exit codes, schema-valid JSON, and replay of
//! emitted certificates.

use std::path::Path;
use std::process::Command;

use jsonschema::JSONSchema;
use rectify::cli::{run_args, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    let mut all = vec!["rectify"];
    all.extend_from_slice(args);
    run_args(all)
}

fn schema() -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.v1.json");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&doc).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v: Value = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stderr));
    if let Err(errors) = schema().validate(&v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{args:?} violates the schema:\n{}", msgs.join("\n"));
    }
    assert_eq!(v["exit_code"].as_i64(), Some(out.code as i64));
    (v, out.code)
}

fn claim_path() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("claims/inseparable_system.toml")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(run(&["analyze", "X", "Z^2+T^3+1", "Q"]).code, 1);
    assert_eq!(run(&["analyze", "X*(X-1)", "Z+X*T^2", "Q"]).code, 0);
    assert_eq!(run(&["analyze", "X", "X*Z", "Q"]).code, 3);
    assert_eq!(run(&["analyze", "X", "Z^2", "F5"]).code, 2);
}

#[test]
fn usage_errors_exit_with_three() {
    assert_eq!(run(&["analyze", "X", "Z+", "Q"]).code, 3);
    assert_eq!(run(&["analyze", "X", "Z", "Q[i]/(i^2-1)"]).code, 3);
    assert_eq!(run(&["frobnicate"]).code, 3);
    assert_eq!(run(&["vartest", "Z", "Q", "--vars", "Z"]).code, 3);
    assert_eq!(run(&["verify", "/nonexistent/claim.toml"]).code, 3);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("analyze"));
}

#[test]
fn reports_validate_against_the_schema() {
    let (v, code) = json(&["analyze", "X^2*(X^2-s)", "Z^2+s*T^2+T", "F2(s)"]);
    assert_eq!(code, 1);
    assert!(v["theorem_path"]
        .as_array()
        .unwrap()
        .iter()
        .any(|t| t == "chp2"));
    assert_eq!(v["flags"]["ufd"], true);
    json(&["analyze", "X", "X*Z", "Q"]);
    json(&["analyze", "X^2+1", "Z+X*T^2", "Q"]);
    json(&["analyze", "X", "Z^2", "F5"]);
    let (v, code) = json(&["vartest", "Z+(T+Z^2)^3", "Q"]);
    assert_eq!((v["result"].as_str(), code), (Some("accept"), 0));
    let (_, code) = json(&["vartest", "Z^2-T^3", "Q"]);
    assert_eq!(code, 1);
    json(&["vartest", "U^2+s*V^2+V", "F2(s)", "--vars", "U,V"]);
    let (v, code) = json(&["verify", &claim_path()]);
    assert_eq!(
        (v["claims"][0]["round_trip"].as_bool(), code),
        (Some(true), 0)
    );
    let (v, code) = json(&["gr-check", "X^2*(X+1)", "Z+X*T", "Q"]);
    assert_eq!((v["w"]["y"].as_i64(), code), (Some(2), 0));
    json(&["gr-check", "(X-1)^2", "Z^2+T", "Q"]);
    json(&["factor", "X^2*(X-1)", "Q"]);
    json(&["factor", "X^4-s", "F2(s)"]);
}

#[test]
fn text_is_the_default() {
    let t = run(&["analyze", "X", "Z^2+T^3+1", "Q"]);
    let t2 = run(&["--text", "analyze", "X", "Z^2+T^3+1", "Q"]);
    assert_eq!(t.stdout, t2.stdout);
    assert!(serde_json::from_str::<Value>(&t.stdout).is_err());
    assert!(t.stdout.contains("NotRectifiable"));
}

#[test]
fn seed_does_not_change_verdicts() {
    for seed in ["1", "7", "123456789"] {
        let out = run(&["--seed", seed, "analyze", "X^3-2", "Z+X*T^2", "Q"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
}

#[test]
fn emitted_certificates_replay_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 3] = [
        &["analyze", "X^2*(X^2-s)", "Z^2+s*T^2+T", "F2(s)"],
        &["analyze", "X*(X-1)*(X^2+1)", "Z+X*T^2+(T+Z^2)^2", "Q"],
        &["vartest", "Z+(T+Z^2)^3", "Q"],
    ];
    for (i, args) in commands.iter().enumerate() {
        let path = dir.path().join(format!("certs{i}.json"));
        let path_s = path.to_string_lossy().into_owned();
        let mut all = vec!["--cert-out", path_s.as_str()];
        all.extend_from_slice(args);
        let out = run(&all);
        assert!(out.code <= 2, "{}", out.stderr);
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(doc["schema"], "rectify.certificates.v1");
        assert!(!doc["certificates"].as_array().unwrap().is_empty());
        let (v, code) = json(&["verify", &path_s]);
        assert_eq!(code, 0, "{v}");
        for c in v["claims"].as_array().unwrap() {
            assert_eq!(c["result"], "accept");
            assert_eq!(c["round_trip"], true);
        }
    }
}

#[test]
fn json_claims_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("claim.json");
    std::fs::write(
        &path,
        r#"{"field": "Q", "vars": ["Z", "T"], "coordinates": ["Z^2", "T"]}"#,
    )
    .unwrap();
    let (v, code) = json(&["verify", &path.to_string_lossy()]);
    assert_eq!(code, 1);
    assert_eq!(v["claims"][0]["unreachable"], "Z");
}

#[test]
fn binary_reports_through_exit_status() {
    let out = Command::new(env!("CARGO_BIN_EXE_rectify"))
        .args(["--json", "analyze", "X", "Z^2+T^3+1", "Q"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "NotRectifiable");
    let bad = Command::new(env!("CARGO_BIN_EXE_rectify"))
        .args(["analyze"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
