use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const SEVEN_SIX: &str =
    "X(8,2,9,1) X(2,10,3,9) X(10,13,11,14) X(14,4,1,3) X(6,12,7,11) X(4,7,5,8) X(12,6,13,5)";

fn knotform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn seven_six_from_pd_and_from_file() {
    let out = knotform(&["invariants", "--pd", SEVEN_SIX, "--coloring", "canonical", "--deleted", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["signature"], -2);
    assert_eq!(v["determinant"], 19);
    assert_eq!(v["mu_canonical"], 5);
    assert_eq!(v["colorings"][0]["goeritz"], serde_json::json!([[3, -1, 0], [-1, 4, -1], [0, -1, 2]]));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{SEVEN_SIX}").unwrap();
    let from_file = knotform(&["invariants", "--pd", file.path().to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(json(&from_file)["signature"], -2);
}

#[test]
fn both_colorings_are_reported() {
    let out = knotform(&["invariants", "--braid", "1 -2 1 -2", "--coloring", "both"]);
    let v = json(&out);
    let colorings = v["colorings"].as_array().unwrap();
    assert_eq!(colorings.len(), 2);
    assert!(colorings.iter().all(|c| c["signature"] == 0));
    assert_eq!(v["arf"], 1);
}

#[test]
fn csv_output() {
    let out = knotform(&["invariants", "--braid", "1 1 1", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "signature,determinant,arf,mu_canonical,mu_dual,crossings\n-2,3,1,3,0,3\n"
    );
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["invariants", "--pd", "X(1,2"][..],
        &["invariants", "--braid", "1 1"],
        &["invariants", "--braid", "1 x"],
        &["invariants"],
        &["invariants", "--braid", "1 1 1", "--coloring", "plaid"],
        &["frobnicate"],
        &["bands", "bands: 1 2; cross(1,5): 1"],
        &["sstar", "{\"matrix\": [[1]], \"euler\": 3}"],
    ] {
        let out = knotform(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_bundled_table() {
    let out = knotform(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_reports_a_wrong_table_entry() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"name": "3_1", "braid": "1 1 1", "expected": {{"signature": -2}}}}"#).unwrap();
    writeln!(file, r#"{{"name": "liar", "braid": "1 1 1", "expected": {{"determinant": 4}}}}"#).unwrap();
    let out = knotform(&["verify", file.path().to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2,liar,expected_determinant,false"));
    assert!(text.contains("1,3_1,expected_signature,true"));
}

#[test]
fn verify_schema_errors_exit_two() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"name": "x", "braid": "1 1 1", "colour": "red"}}"#).unwrap();
    let out = knotform(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["schema_errors"][0]["line"], 1);
}

#[test]
fn verify_empty_table_passes() {
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = knotform(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"], serde_json::json!([]));
}

#[test]
fn verify_missing_file_exits_two() {
    let out = knotform(&["verify", "/nonexistent/knots.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn obstruct_from_invariants_and_from_a_knot() {
    let out = knotform(&["obstruct", "--signature", "-8", "--against", "0"]);
    let v = json(&out);
    assert_eq!(v["gordian_lower_bound"], 4);
    assert_eq!(v["sharp_gordian_lower_bound"], 2);

    let v = json(&knotform(&["obstruct", "--braid", "1 -2 1 -2"]));
    assert_eq!(v["reports"][0]["test_name"], "moebius_b4");
    assert_eq!(v["reports"][0]["verdict"], "obstructed");

    let out = knotform(&["obstruct", "--signature", "-2", "--det", "15", "--bound", "20", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("crosscap2,not_obstructed,") && l.contains("(-7 8 -7)")));
}

#[test]
fn sstar_walk_is_reproducible() {
    let state = r#"{"matrix": [[3,-1,0],[-1,4,-1],[0,-1,2]], "euler": -10}"#;
    let a = knotform(&["sstar", state, "--steps", "200", "--seed", "9"]);
    let b = knotform(&["sstar", state, "--steps", "200", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["start"], -2);
    assert_eq!(v["constant"], true);
    assert_eq!(v["conserved"].as_array().unwrap().len(), 200);

    let v = json(&knotform(&["sstar", "--pd", SEVEN_SIX, "--steps", "50"]));
    assert_eq!(v["start"], -2);
}

#[test]
fn bands_from_text_and_from_a_knot() {
    let v = json(&knotform(&["bands", "bands: 3 4 2; cross(1,2): -1; cross(2,3): -1"]));
    assert_eq!(v["linking_matrix"], serde_json::json!([[3, -1, 0], [-1, 4, -1], [0, -1, 2]]));
    assert_eq!(v["smith"], serde_json::json!([1, 1, 19]));

    let v = json(&knotform(&["bands", "--braid", "1 1 1"]));
    assert_eq!(v["determinant"].as_i64().unwrap().abs(), 3);
}
