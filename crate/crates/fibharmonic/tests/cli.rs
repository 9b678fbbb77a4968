//! End-to-end checks of the command-line interface: exit codes, output
//! shapes, and the report formats.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fibharmonic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn list_prints_the_whole_catalog() {
    let out = run(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert!(lines.len() >= 55, "only {} catalog lines", lines.len());
    assert!(lines.iter().all(|l| l.split(" | ").count() == 5));
}

#[test]
fn list_filters_by_family() {
    let out = run(&["list", "--family", "BT-GQ"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() == 10);
    assert!(text.lines().all(|l| l.contains("| BT-GQ |")));
}

#[test]
fn list_unknown_id_is_usage_error() {
    let out = run(&["list", "--id", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_is_usage_error() {
    let out = run(&["list", "--family", "NOT-A-FAMILY"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flag_is_usage_error() {
    let out = run(&["verify", "--does-not-exist"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_prints_both_sides_and_outcome() {
    let out = run(&["eval", "--id", "rec-FF-part", "--set", "n=1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "lhs = -1, rhs = -1, EQUAL");
}

#[test]
fn eval_shows_ln2_coefficients() {
    let out = run(&["eval", "--id", "prop1-ln2-a", "--set", "n=2,seed=0:1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ln2"), "expected ln2 terms in {text:?}");
    assert!(text.trim().ends_with("EQUAL"));
}

#[test]
fn eval_constraint_violation_is_usage_error() {
    let out = run(&["eval", "--id", "rec-odd", "--set", "n=2,r=2,s=0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_missing_parameter_is_usage_error() {
    let out = run(&["eval", "--id", "rec-odd", "--set", "n=2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_range_override_passes() {
    let out = run(&["verify", "--ids", "rec-FF-part", "--set", "n=1..60"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("json report");
    assert_eq!(parsed["summaries"][0]["checked"], 60);
    assert_eq!(parsed["summaries"][0]["equal"], 60);
}

#[test]
fn verify_report_schema_is_stable() {
    let dir = std::env::temp_dir().join("fibharmonic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--ids",
        "conv-sq,gib-sq",
        "--n-max",
        "6",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(parsed["tool_version"].is_string());
    assert!(parsed["grid"].is_object());
    let summaries = parsed["summaries"].as_array().unwrap();
    assert_eq!(summaries.len(), 2);
    for s in summaries {
        for key in [
            "id",
            "family",
            "paper_anchor",
            "checked",
            "equal",
            "unequal",
            "skipped",
            "first_counterexample",
        ] {
            assert!(!s[key].is_null() || key == "first_counterexample");
        }
        // No timings by default: reports must be byte-reproducible.
        assert!(s.get("elapsed_ms").is_none());
    }
    assert!(parsed.get("reports").is_none());
}

#[test]
fn verify_verbose_tsv_has_one_report_per_row() {
    let out = run(&[
        "verify",
        "--ids",
        "conv-sq",
        "--n-max",
        "5",
        "--format",
        "tsv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "id\tassignment\tlhs\trhs\toutcome");
    assert_eq!(lines.count(), 6); // n in [0, 5]
}

#[test]
fn verify_mutation_canary_exits_one() {
    let out = run(&[
        "verify",
        "--ids",
        "conv-sq",
        "--n-max",
        "6",
        "--mutate-rhs",
        "conv-sq",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_discrepancy_entry_reproduces_and_passes() {
    // shift-simple is a committed discrepancy; reproducing its stored
    // counterexample is the expected outcome, so the exit code is 0.
    let out = run(&["verify", "--ids", "shift-simple", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    // A mutated build must drift off the stored counterexample.
    let out = run(&[
        "verify",
        "--ids",
        "shift-simple",
        "--n-max",
        "4",
        "--mutate-rhs",
        "shift-simple",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_report_env_var_default() {
    let dir = std::env::temp_dir().join("fibharmonic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("env-report.json");
    let out = bin()
        .args(["verify", "--ids", "rec-FF-part", "--n-max", "3"])
        .env("FIBHARMONIC_REPORT", path.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["summaries"][0]["id"], "rec-FF-part");
}

#[test]
fn verify_runs_are_byte_identical() {
    let a = run(&["verify", "--family", "ABEL-COMB", "--n-max", "5", "--jobs", "1"]);
    let b = run(&["verify", "--family", "ABEL-COMB", "--n-max", "5", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(out_bytes(&a), out_bytes(&b));
}

fn out_bytes(out: &Output) -> &[u8] {
    &out.stdout
}

#[test]
fn audit_subcommand_confirms_committed_statuses() {
    let out = run(&["audit", "--ids", "conv-sq,prop1-a,shift-simple", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.ends_with("as committed")));
}
