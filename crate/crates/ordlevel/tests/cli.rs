use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ordlevel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordlevel"))
        .args(args)
        .env_remove("ORDLEVEL_BUDGET")
        .env_remove("ORDLEVEL_POINT_BUDGET")
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = ordlevel(&all);
    let report = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (out.status.code().unwrap(), report)
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn fink_is_not_level_with_rank_five_and_r_max_six() {
    let (code, report) = json_report(&["check", &path("fink.json"), "--method", "all"]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["verdict"], "NOT_LEVEL");
    assert_eq!(report["result"]["r"], 5);
    assert_eq!(report["result"]["r_max"], 6);
    assert_eq!(report["certificates"].as_array().unwrap().len(), 3);
    let y = &report["certificates"][1]["witness_point"];
    assert_eq!(y["height"], 6);
    assert_eq!(y["coords"]["11"], 5);
    assert_eq!(report["certificates"][1]["sequence"], serde_json::json!([["9", "7"], ["5", "3"]]));
}

#[test]
fn chain_is_level_and_malformed_input_is_an_error() {
    assert_eq!(ordlevel(&["check", &path("chain4.json")]).status.code(), Some(0));
    let out = ordlevel(&["check", &path("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("error:"));
    assert_eq!(ordlevel(&["check", "/nonexistent/poset.json"]).status.code(), Some(2));
    assert_eq!(ordlevel(&["check"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_with_two() {
    let out = ordlevel(&["check", &path("fink.json"), "--method", "subsets", "--budget", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_ordlevel"))
        .args(["check", &path("fink.json"), "--method", "subsets"])
        .env("ORDLEVEL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_mode_keeps_stdout_machine_readable() {
    let out = ordlevel(&["check", &path("chain4.json"), "--json"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["level"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("LEVEL"));
    let plain = ordlevel(&["check", &path("chain4.json")]);
    assert!(serde_json::from_slice::<Value>(&plain.stdout).is_err());
}

#[test]
fn reports_are_identical_apart_from_timing() {
    let args = ["check", &path("fink.json")];
    let (_, mut a) = json_report(&args);
    let (_, mut b) = json_report(&args);
    assert_ne!(a["timing"], Value::Null);
    a.as_object_mut().unwrap().remove("timing");
    b.as_object_mut().unwrap().remove("timing");
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn ehrhart_and_hstar_of_small_posets() {
    let (code, report) = json_report(&["ehrhart", &path("chain2.json")]);
    assert_eq!(code, 0);
    // (k+1)(k+2)/2
    let values: Vec<i64> = report["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(values, (0..4).map(|k| (k + 1) * (k + 2) / 2).collect::<Vec<i64>>());
    let (_, chain) = json_report(&["hstar", &path("chain2.json")]);
    assert_eq!(chain["result"]["hstar"], serde_json::json!([1, 0, 0]));
    let (_, anti) = json_report(&["hstar", &path("antichain2.json")]);
    assert_eq!(anti["result"]["hstar"], serde_json::json!([1, 1, 0]));
    let (_, fink) = json_report(&["hstar", &path("fink.json")]);
    assert_eq!(fink["result"]["codegree"], 5);
}

#[test]
fn polytope_commands() {
    let (code, report) = json_report(&["alcoved", "check", &path("box21.json"), "--kmax", "6"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["verdict"], "LEVEL_UP_TO(6)");
    let (code, report) = json_report(&["product", &path("counterexample.json"), "--kmax", "4"]);
    assert_eq!(code, 1);
    let failing = report["result"]["product"]["failing_points"].as_array().unwrap();
    assert!(failing.contains(&serde_json::json!([2, 2, 2, 2, 1])));
    let (_, report) = json_report(&["alcoved", "points", &path("triangle.json"), "--k", "3"]);
    assert_eq!(report["result"]["count"], 10);
    let (code, _) = json_report(&["alcoved", "shrink", &path("triangle.json")]);
    assert_eq!(code, 2);
}

#[test]
fn shipped_fixtures_replay() {
    let out = ordlevel(&["verify-fixtures", "--manifest", &path("manifest.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_fixtures_detects_drift() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("chain4.json"), dir.path().join("chain4.json")).unwrap();
    let manifest = dir.path().join("manifest.json");
    std::fs::write(
        &manifest,
        r#"[{"name": "c", "args": ["check", "chain4.json"], "exit": 0, "expected": "c.json"}]"#,
    )
    .unwrap();
    let m = manifest.to_string_lossy().into_owned();
    assert_eq!(ordlevel(&["verify-fixtures", "--manifest", &m, "--bless"]).status.code(), Some(0));
    assert_eq!(ordlevel(&["verify-fixtures", "--manifest", &m]).status.code(), Some(0));
    // a different poset under the same name no longer matches
    std::fs::copy(fixture("fink.json"), dir.path().join("chain4.json")).unwrap();
    assert_eq!(ordlevel(&["verify-fixtures", "--manifest", &m]).status.code(), Some(2));
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--seed", "3", "--trials", "20", "--max-size", "6"];
    let (code, mut a) = json_report(&args);
    assert_eq!(code, 0);
    let (_, mut b) = json_report(&args);
    a.as_object_mut().unwrap().remove("timing");
    b.as_object_mut().unwrap().remove("timing");
    assert_eq!(a, b);
    assert_eq!(a["result"]["trials"], 20);
}
