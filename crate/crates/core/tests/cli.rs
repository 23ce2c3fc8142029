use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use radlie::genrad::RadicalReport;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn radlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radlie"))
        .args(args)
        .env_remove("RADLIE_ENUM_CAP")
        .env_remove("RADLIE_SEED")
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_accepts_and_rejects() {
    let ok = radlie(&["validate", path(&corpus("r2-gf3.json"))]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("ok: r2-gf3 (dim 2"));
    let bad = radlie(&["validate", path(&corpus("rejected/bokut7-gf7.json"))]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Jacobi"));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = radlie(&["validate", "/nonexistent/algebra.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_text_and_json() {
    let text = radlie(&["analyze", path(&corpus("r2-gf3.json"))]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("<e2>"));
    let json = radlie(&["analyze", "--json", path(&corpus("r2-gf3.json"))]);
    assert_eq!(json.status.code(), Some(0));
    let rep = RadicalReport::from_json(&stdout(&json)).unwrap();
    assert_eq!(rep.nilradical.dim, Some(1));
    assert_eq!(rep.solvable_radical.dim, Some(2));
    assert_eq!(rep.nilregular, Some(true));
    assert_eq!(rep.solregular, Some(false));
    assert!(rep.theorem_results.iter().all(|r| !r.outcome.is_fail()));
}

#[test]
fn caps_from_flags_and_environment() {
    let file = corpus("heis-gf3.json");
    let caps = |cmd: &mut Command| -> serde_json::Value {
        let o = cmd.output().unwrap();
        assert_eq!(o.status.code(), Some(0));
        serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap()["caps"].clone()
    };
    let bin = env!("CARGO_BIN_EXE_radlie");
    let from_env = caps(
        Command::new(bin)
            .args(["analyze", "--json", path(&file)])
            .env("RADLIE_ENUM_CAP", "4096")
            .env("RADLIE_SEED", "11"),
    );
    assert_eq!(from_env["enum_cap"], 4096);
    assert_eq!(from_env["seed"], 11);
    // flags win over the environment
    let from_flag = caps(
        Command::new(bin)
            .args(["analyze", "--json", "--enum-cap", "512", "--spin-seeds", "3", path(&file)])
            .env("RADLIE_ENUM_CAP", "4096"),
    );
    assert_eq!(from_flag["enum_cap"], 512);
    assert_eq!(from_flag["spin_seeds"], 3);
}

#[test]
fn check_single_statement() {
    let o = radlie(&["check", "--suite", "t:gennil,t:rad", path(&corpus("gl2-q.json")), path(&corpus("r2-gf3.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("t:gennil"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn check_json_is_deterministic() {
    let file = corpus("heis-gf2.json");
    let args = ["check", "--json", "--seed", "7", path(&file)];
    let (a, b) = (radlie(&args), radlie(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn check_unknown_statement() {
    let o = radlie(&["check", "--suite", "t:bogus", path(&corpus("r2-gf3.json"))]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_agrees_or_declines() {
    let o = radlie(&["oracle", path(&corpus("r2-gf3.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("agree")).count(), 5);
    let q = radlie(&["oracle", path(&corpus("r2-q.json"))]);
    assert_eq!(q.status.code(), Some(3));
}

#[test]
fn corpus_emit_matches_shipped() {
    let dir = tempfile::tempdir().unwrap();
    let o = radlie(&["corpus", "emit", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let shipped = std::fs::read_to_string(corpus("nil7-gf7.json")).unwrap();
    let fresh = std::fs::read_to_string(dir.path().join("nil7-gf7.json")).unwrap();
    assert_eq!(shipped, fresh);
    assert!(dir.path().join("rejected/bokut7-gf7.json").exists());
}

#[test]
fn pasha_needs_allow_partial() {
    let file = corpus("pasha-7-1.json");
    let o = radlie(&["analyze", path(&file)]);
    assert_eq!(o.status.code(), Some(3));
    let partial = radlie(&["analyze", "--allow-partial", path(&file)]);
    assert_eq!(partial.status.code(), Some(0));
    assert!(stdout(&partial).contains("[unavailable]"));
}
