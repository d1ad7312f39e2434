use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hyperell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperell")).args(args).output().unwrap()
}

fn write_config(dir: &TempDir, name: &str, json: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let out = hyperell(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    let suites: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    for s in ["presentation", "kernel", "corollary", "uniqueness", "hilbert", "involution", "godeaux", "nodes"] {
        assert!(suites.contains(&s), "{s} missing");
    }
    for s in v["suites"].as_array().unwrap() {
        for c in s["checks"].as_array().unwrap() {
            assert!(!c["identity"].as_str().unwrap().is_empty());
        }
    }
}

#[test]
fn tampered_override_fails_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "t.json", r#"{"overrides": {"s2": "a + b"}}"#);
    let out = hyperell(&["verify", "kernel", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("ker Phi") && err.contains("maps to"), "{err}");
}

#[test]
fn construct_k3_dump() {
    let out = hyperell(&["construct", "K3", "--format", "json", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equations"].as_array().unwrap().len(), 20);
    assert_eq!(v["verified"], true);
}

#[test]
fn construct_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let w = write_config(&dir, "w.json", r#"{"alpha": 2, "beta": "1/2", "l": [0, 1, 0, 0]}"#);
    let out = hyperell(&["construct", "Wprime", "--config", &w]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of domain"));

    let c = write_config(&dir, "c.json", r#"{"curve_branch": {"f": "s1^3", "g": "s1^4 + s2^4"}}"#);
    let out = hyperell(&["construct", "curve", "--config", &c]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("contract violation"));

    let bad = write_config(&dir, "bad.json", r#"{"alpah": 2}"#);
    assert_eq!(hyperell(&["verify", "--config", &bad]).status.code(), Some(2));
    assert_eq!(hyperell(&["construct"]).status.code(), Some(2));
}

#[test]
fn hilbert_prints_the_series() {
    let out = hyperell(&["hilbert"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("P(t, e) = 1 + e t + (2+2e) t^2 + (4+4e) t^3"), "{text}");
    assert!(text.contains("(8+7e) t^8"));
    assert!(text.contains("numerator = 1 - t^4"));
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = hyperell(&["report", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let read = |p: &Path| std::fs::read(p).unwrap();
    assert_eq!(read(&a), read(&b));
    let v: serde_json::Value = serde_json::from_slice(&read(&a)).unwrap();
    assert_eq!(v["godeaux"]["free_scalars"]["sections"], 13);
}
