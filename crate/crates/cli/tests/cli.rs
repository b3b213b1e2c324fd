use std::process::{Command, Output};

use serde_json::Value;

fn sln(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sln")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn check_names(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect()
}

#[test]
fn cybe_json_report() {
    let out = sln(&["verify", "cybe", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "verify cybe");
    assert_eq!(v["params"]["n"], "3");
    assert_eq!(check_names(&v), ["cybe"]);
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn aw4_report_names() {
    let out = sln(&["verify", "aw", "--n", "4", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(check_names(&json(&out)), ["jacobi", "reflection", "pro2-presentation"]);
}

#[test]
fn text_format_is_default() {
    let out = sln(&["verify", "skew", "--n", "2"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("verify skew n=2"));
    assert!(s.contains("PASS skew"));
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = sln(&["verify", "nonsense", "--n", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    let out = sln(&["verify", "cybe", "--n", "3", "--bogus"]);
    assert!(!out.status.success());
    assert!(!sln(&["verify", "cybe"]).status.success());
}

#[test]
fn validation_errors_name_the_constraint() {
    let out = sln(&["verify", "frt", "--n", "2", "--cutoff", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty truncation window"));
    let out = sln(&["verify", "automorphism", "--which", "theta2", "--n", "3", "--levels", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even N"));
    let out = sln(&["verify", "cybe", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(sln(&["verify", "aw", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn epsilon_selects_one_sign() {
    let out = sln(&[
        "verify",
        "automorphism",
        "--which",
        "theta2",
        "--n",
        "2",
        "--levels",
        "1",
        "--epsilon",
        "-1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["params"]["epsilon"], "-1");
    assert!(check_names(&v).iter().all(|n| n.ends_with("[eps=-1]")));
    let both =
        json(&sln(&["verify", "automorphism", "--which", "theta2", "--n", "2", "--levels", "1", "--format", "json"]));
    assert_eq!(both["params"]["epsilon"], "+1,-1");
}

#[test]
fn serial_and_parallel_agree() {
    let strip = |o: Output| {
        let mut v = json(&o);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "onsager", "--n", "3", "--levels", "2", "--format", "json", "--seed", "7"];
    let on = strip(sln(&[&args[..], &["--parallel", "on"]].concat()));
    let off = strip(sln(&[&args[..], &["--parallel", "off"]].concat()));
    assert_eq!(on, off);
    assert_eq!(check_names(&on), ["presentation-agreement", "theta1-fixed", "ui-relations", "oan"]);
}

#[test]
fn extract_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = sln(&[
        "extract",
        "aw",
        "--n",
        "3",
        "--convention",
        "literal",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(check_names(&v).contains(&"matches-displayed-table".to_string()));
    let table = sln_core::askey_wilson::StructTable::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(table.dim(), 8);
    assert!(sln_core::askey_wilson::check_jacobi(&table).is_ok());
}

#[test]
fn failing_extraction_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = sln(&[
        "extract",
        "aw",
        "--n",
        "4",
        "--convention",
        "flip-non-adjacent",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["checks"][0]["name"], "consistent");
    assert_eq!(v["checks"][0]["status"], "fail");
    assert!(v["checks"][0]["detail"]["info"].is_string());
    assert!(!path.exists());
}

#[test]
fn charges_print_json_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("charges.json");
    let out =
        sln(&["charges", "print", "--n", "2", "--max-order", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["n"], 2);
    assert_eq!(v["charges"].as_array().unwrap().len(), 2);
    assert_eq!(v["parameters"].as_array().unwrap().len(), 4);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file, v);
}
