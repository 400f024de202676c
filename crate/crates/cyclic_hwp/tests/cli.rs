use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cyclic_hwp::certificate::Certificate;
use serde_json::Value;

fn hwp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hwp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hwp(args).status.code().expect("exit code")
}

fn generate_to(path: &Path, extra: &[&str]) {
    let mut args = vec![
        "generate",
        "--ell",
        "9",
        "--n",
        "5",
        "--output",
        path.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    assert_eq!(code(&args), 0);
}

#[test]
fn invalid_parameters_exit_two() {
    assert_eq!(code(&["generate", "--ell", "11", "--n", "5"]), 2);
    assert_eq!(code(&["generate", "--ell", "9", "--n", "3"]), 2);
    assert_eq!(code(&["generate", "--ell", "9"]), 2);
    assert_eq!(code(&["skolem", "--order", "0"]), 2);
    assert_eq!(code(&["verify", "--input", "/nonexistent/cert.json"]), 2);
}

#[test]
fn malformed_certificate_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"schema_version\": \"1\", ").unwrap();
    assert_eq!(code(&["verify", "--input", path.to_str().unwrap()]), 2);
    fs::write(&path, "hwp-certificate 7\n").unwrap();
    assert_eq!(code(&["verify", "--input", path.to_str().unwrap()]), 2);
}

#[test]
fn text_and_json_describe_the_same_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("c.json");
    let text = dir.path().join("c.txt");
    generate_to(&json, &["--verify", "base", "--emit-maps"]);
    generate_to(
        &text,
        &["--verify", "base", "--emit-maps", "--format", "text"],
    );
    let a = Certificate::parse(&fs::read_to_string(&json).unwrap()).unwrap();
    let b = Certificate::parse(&fs::read_to_string(&text).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(a.maps.is_some());
    for path in [&json, &text] {
        assert_eq!(
            code(&[
                "verify",
                "--input",
                path.to_str().unwrap(),
                "--level",
                "full"
            ]),
            0
        );
    }
}

#[test]
fn verify_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    generate_to(&path, &[]);
    let out = hwp(&["verify", "--input", path.to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], Value::Bool(true));
    assert_eq!(v["base"]["missing"], Value::Array(vec![]));
    assert!(v.get("full").is_none());
}

#[test]
fn dropped_cycle_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    generate_to(&path, &[]);
    let mut cert = Certificate::parse(&fs::read_to_string(&path).unwrap()).unwrap();
    cert.long_base_cycles.pop();
    fs::write(&path, cert.to_json()).unwrap();
    assert_eq!(code(&["verify", "--input", path.to_str().unwrap()]), 1);
    assert_eq!(code(&["develop", "--input", path.to_str().unwrap()]), 1);
}

#[test]
fn skolem_prints_a_sequence() {
    let out = hwp(&["skolem", "--order", "6"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["flavor"], "hooked");
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
}

#[test]
fn develop_summary_and_single_factor() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    generate_to(&path, &[]);
    let input = path.to_str().unwrap();

    let out = hwp(&["develop", "--input", input]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["factors"].as_u64(), v["short_factors"].as_u64()),
        (Some(409), Some(45))
    );

    let out = hwp(&["develop", "--input", input, "--factor-index", "0"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cycle_length"], 9);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 91);

    let factor = dir.path().join("f.json");
    let args = [
        "develop",
        "--input",
        input,
        "--factor-index",
        "408",
        "--output",
        factor.to_str().unwrap(),
    ];
    assert_eq!(code(&args), 0);
    let v: Value = serde_json::from_slice(&fs::read(&factor).unwrap()).unwrap();
    assert_eq!(v["cycle_length"], 91);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 9);

    assert_eq!(
        code(&["develop", "--input", input, "--factor-index", "409"]),
        2
    );
}
