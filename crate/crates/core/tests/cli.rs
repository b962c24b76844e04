use std::process::{Command, Output};

use serde_json::Value;

fn gradlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn build_so_split_three() {
    let o = gradlie(&["build", "so-split", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["dim"], 21);
}

#[test]
fn broken_jacobi_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let mut alg = json_out(&gradlie(&["build", "so3"]));
    alg["brackets"][0][2][0][1] = Value::from("2/1");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, alg.to_string()).unwrap();

    let o = gradlie(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report = json_out(&o);
    let jacobi = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "jacobi")
        .unwrap();
    assert_eq!(jacobi["status"], "fail");
    assert!(jacobi["detail"].as_str().unwrap().starts_with("triple"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"dim\":").unwrap();
    let o = gradlie(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(err["error"].is_string());

    assert_eq!(gradlie(&["build", "e8"]).status.code(), Some(2));
    assert_eq!(gradlie(&["prolong"]).status.code(), Some(2));
}

#[test]
fn scan_gap_reports_violation() {
    let o = gradlie(&["scan-gap", "g2", "--forbidden", "3", "14", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!json_out(&o)["violations"].as_array().unwrap().is_empty());

    let o = gradlie(&["scan-gap", "g2", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["forbidden"], serde_json::json!([9, 14]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["scan-gap", "so3", "--trials", "40", "--seed", "11"][..],
        &["stabilizer", "g2", "--probe"][..],
        &["build", "sp21"][..],
    ] {
        let a = gradlie(args);
        let b = gradlie(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    let o = gradlie(&["build", "g2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = gradlie(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["component_dims"], serde_json::json!([2, 1, 2, 4, 2, 1, 2]));
}

#[test]
fn analyze_model_symbol() {
    let o = gradlie(&["analyze", "--model", "sp21", "--point", "1,-1/2,0,0,0,0,3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json_out(&o);
    assert_eq!(r["growth"]["dims"], serde_json::json!([4, 7]));
    assert_eq!(r["rank4"]["class"], "elliptic");
}

#[test]
fn reproduce_g2() {
    let o = gradlie(&["reproduce-paper", "--family", "g2", "--trials", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json_out(&o);
    assert_eq!(report["passed"], true);
    let rows = report["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["pass"] == true));
}
