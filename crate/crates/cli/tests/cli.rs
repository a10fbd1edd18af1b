//! End-to-end checks of the binary: exit-code taxonomy, export round
//! trips, and deterministic output.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grs-selfdual"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn field_info_prints_canonical_field() {
    let out = run(&["field-info", "--p", "5", "--m", "1"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("GF(25)"));
    assert!(text.contains("[2, 0, 1]"));
    assert!(text.contains("[1, 1]"));
}

#[test]
fn construct_writes_verified_export() {
    let dir = std::env::temp_dir().join("grs-selfdual-test-construct");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t31.json");
    let out = run(&[
        "construct", "--p", "5", "--m", "1", "--family", "T31", "--e1", "4", "--e2", "8",
        "--s", "1", "--t", "2", "--variant", "n", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let export: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(export["n"], 12);
    assert_eq!(export["k"], 6);
    assert_eq!(export["extended"], false);
    assert_eq!(export["provenance"]["theorem"], "T31");
    assert_eq!(export["provenance"]["variant"], "n");

    // verify accepts it
    let out = run(&["verify", "--in", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("\"pass\":true"));

    // and with an explicit full / sampled mode
    let out = run(&["verify", "--in", path.to_str().unwrap(), "--full"]);
    assert!(out.status.success());
    let out =
        run(&["verify", "--in", path.to_str().unwrap(), "--sampled", "--seed", "7"]);
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("\"Sampled\""));
}

#[test]
fn construct_is_deterministic() {
    let args = [
        "construct", "--p", "5", "--m", "1", "--family", "T32", "--e1", "4", "--e2", "4",
        "--s", "1", "--t", "1", "--variant", "n+2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical invocations must produce identical exports");
}

#[test]
fn invalid_parameters_exit_one() {
    // 4 does not divide (s-1)(r+1) = 6 for s = 2, r = 5
    let out = run(&[
        "construct", "--p", "5", "--m", "1", "--family", "T31", "--e1", "12", "--e2", "4",
        "--s", "2", "--t", "1", "--variant", "n",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("does not apply"), "stderr: {err}");

    // structurally broken: e1 does not divide q - 1
    let out = run(&[
        "construct", "--p", "5", "--m", "1", "--family", "T31", "--e1", "7", "--e2", "4",
        "--s", "1", "--t", "1", "--variant", "n",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["field-info", "--p", "9", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tampered_export_exits_two() {
    let dir = std::env::temp_dir().join("grs-selfdual-test-tamper");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("code.json");
    let out = run(&[
        "construct", "--p", "5", "--m", "1", "--family", "T31", "--e1", "4", "--e2", "8",
        "--s", "1", "--t", "2", "--variant", "n", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let mut export: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // replace one multiplier with something other than +-v
    let v0: Vec<u64> = export["v"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    let neg: Vec<u64> = v0.iter().map(|&c| (5 - c) % 5).collect();
    let replacement = [vec![1, 0], vec![0, 1], vec![2, 0]]
        .into_iter()
        .find(|cand| *cand != v0 && *cand != neg)
        .unwrap();
    export["v"][0] = serde_json::json!(replacement);
    std::fs::write(&path, serde_json::to_string_pretty(&export).unwrap()).unwrap();

    let out = run(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout_str(&out));
    assert!(stdout_str(&out).contains("\"pass\":false"));
}

#[test]
fn usage_errors_exit_sixty_four() {
    let out = run(&["construct", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["construct", "--p", "5", "--m", "1", "--family", "T99"]);
    assert_eq!(out.status.code(), Some(64));
    // help is not a usage error
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn enumerate_emits_csv() {
    let out = run(&["enumerate", "--r", "5", "--family", "T31"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q,n,source,e1,f1,e2,f2,s,t,variant"));
    assert!(text.lines().any(|l| l.starts_with("25,10,T31v")));
    assert!(text.lines().any(|l| l.starts_with("25,12,T31v")));
    assert!(text.lines().any(|l| l.starts_with("25,14,T31v")));

    let dir = std::env::temp_dir().join("grs-selfdual-test-csv");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lengths.csv");
    let out = run(&["enumerate", "--r", "7", "--family", "REF18", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(Path::new(&path).exists());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("q,n,source"));
    assert!(body.contains("REF18"));
}

#[test]
fn coverage_report_fields() {
    let out = run(&["coverage", "--r", "5"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("q = 25"));
    assert!(text.contains("new lengths vs REF20"));

    let out = run(&["coverage", "--r", "5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["q"], 25);
    assert!(v["combined_count"].as_u64().unwrap() >= v["ref20_count"].as_u64().unwrap());
}

#[test]
fn examples_suite_passes() {
    let out = run(&["examples"]);
    assert!(out.status.success(), "stdout: {}", stdout_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("GF(149^2)"));
    assert!(text.contains("GF(151^2)"));
    assert!(!text.contains("FAIL"));
}
