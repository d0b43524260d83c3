use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrowkernel")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn basis_text() {
    let out = run(&["basis", &fixture("L2.alg")]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("dim = 10"), "{s}");
    assert!(s.contains("nilpotency = 4"), "{s}");
}

#[test]
fn basis_json_parses() {
    let out = run(&["basis", &fixture("XU.alg"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 7);
    assert_eq!(v["basis"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["removable", &fixture("L2.alg"), "--set", "a2"]), 0);
    assert_eq!(code(&["removable", &fixture("XU.alg"), "--set", "c"]), 1);
    assert_eq!(code(&["removable", &fixture("L2.alg"), "--set", "zz"]), 2);
    assert_eq!(code(&["basis", "/nonexistent/file.alg"]), 2);
    assert_eq!(code(&["basis", &fixture("LOOP.alg")]), 3);
    assert_eq!(code(&["verify", &fixture("H4.alg"), "--set", "a,b"]), 4);
    assert_eq!(code(&["verify", &fixture("H4.alg"), "--set", "a"]), 0);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let dir = std::env::temp_dir().join(format!("arrowkernel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.alg");
    std::fs::write(&path, "field gf 7\nquiver\n  arrow a : 1 ->\n").unwrap();
    assert_eq!(code(&["basis", path.to_str().unwrap()]), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn remove_prints_a_reparseable_quotient() {
    let out = run(&["remove", &fixture("L3.alg"), "--set", "a2,a3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim_gamma"], 6);
    let text = v["presentation"].as_str().unwrap();
    assert!(arrowkernel_core::parse_presentation(text).is_ok());
}

#[test]
fn hochschild_methods_agree() {
    let out = run(&["hochschild", &fixture("L1.alg"), "--hh-max", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["methods_agree"], true);
}

#[test]
fn verify_seed_changes_nothing_structural() {
    let a = run(&["verify", &fixture("L2.alg"), "--set", "a2", "--format", "json", "--seed", "1"]);
    let b = run(&["verify", &fixture("L2.alg"), "--set", "a2", "--format", "json", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdicts"]["overall"], "pass");
}
