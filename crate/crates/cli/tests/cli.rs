use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordgroups")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ordgroups-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const HEIS: &str = r#"{"family":"e_c","params":{"c":0.5}}"#;

#[test]
fn eval_prints_the_product() {
    let out = run(&["eval", "--law", HEIS, "--op", "mul", "--a", "1,2,3", "--b", "4,5,6"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"result":[5,7,7.5]}"#);

    let out = run(&["eval", "--law", r#"{"family":"t_k","params":{"k":1}}"#, "--op", "mul", "--a", "0,0,1", "--b", "0,1,0"]);
    let v = stdout_json(&out)["result"].clone();
    let e = std::f64::consts::E;
    assert!((v[0].as_f64().unwrap() - e).abs() < 1e-15 && (v[1].as_f64().unwrap() - e).abs() < 1e-15);
    assert_eq!(v[2], 1);

    let out = run(&["eval", "--law", r#"{"family":"g_cd","params":{"c":1,"d":-2}}"#, "--op", "comm", "--a", "0,0,0", "--b", "0,0,0"]);
    assert_eq!(stdout_json(&out)["result"], serde_json::json!([0, 0, 0]));
}

#[test]
fn exit_codes() {
    let bad_json = run(&["eval", "--law", "{", "--op", "inv", "--a", "1,2,3"]);
    assert_eq!(bad_json.status.code(), Some(2));
    let stderr: Value = serde_json::from_slice(&bad_json.stderr).unwrap();
    assert_eq!(stderr["kind"], "json");

    let wrong_dim = run(&["eval", "--law", HEIS, "--op", "inv", "--a", "1,2"]);
    assert_eq!(wrong_dim.status.code(), Some(2));
    let missing_b = run(&["eval", "--law", HEIS, "--op", "mul", "--a", "1,2,3"]);
    assert_eq!(missing_b.status.code(), Some(2));

    let not_ordered = run(&["classify", "--law", r#"{"family":"semidirect_rr","params":{"c":1}}"#, "--order", "0,1"]);
    assert_eq!(not_ordered.status.code(), Some(3));

    let overflow = run(&["eval", "--law", r#"{"family":"semidirect_rr","params":{"c":1000}}"#, "--op", "mul", "--a", "0,1", "--b", "1,0"]);
    assert_eq!(overflow.status.code(), Some(3));

    let witness = r#"{"source":{"family":"e_c","params":{"c":3}},"target":{"family":"e_c","params":{"c":0.5}},"matrix":[[1,0,0],[0,1,0],[0,0,6]]}"#;
    let failed = run(&["witness-verify", "--witness", witness]);
    assert_eq!(failed.status.code(), Some(4));
    assert_eq!(stdout_json(&failed)["pass"], false);
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "--law", r#"{"family":"e_c","params":{"c":-4}}"#, "--order", "0,1,2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["label"], "E_minus");
    assert_eq!(v["witness"]["matrix"], serde_json::json!([[4, 0, 0], [0, 1, 0], [0, 0, 1]]));
    assert_eq!(v["verification"]["pass"], true);

    let v = stdout_json(&run(&["classify", "--law", r#"{"family":"additive","params":{"n":2}}"#]));
    assert_eq!(v["label"], "R2_abelian");

    let v = stdout_json(&run(&["classify", "--law", r#"{"family":"k_cd","params":{"c":2,"d":6},"order":{"significance":[0,1,2]}}"#]));
    assert_eq!((v["label"].as_str(), v["params"]["f"].as_f64()), (Some("K_plus"), Some(3.0)));

    let v = stdout_json(&run(&["classify", "--law", r#"{"family":"e_c","params":{"c":3}}"#]));
    assert_eq!(v["label"], "Heis");
    assert_eq!(v["witness"]["inverse_matrix"], serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 6]]));
}

#[test]
fn classify_output_verifies_as_a_witness() {
    let out = run(&["classify", "--law", r#"{"family":"g_cd","params":{"c":2,"d":3}}"#, "--order", "0,1,2"]);
    let witness = stdout_json(&out)["witness"].to_string();
    let check = run(&["witness-verify", "--witness", &witness]);
    assert!(check.status.success());
    assert_eq!(stdout_json(&check)["order"]["pass"], true);
}

#[test]
fn checks_report_pass_and_fail() {
    let srr = r#"{"family":"semidirect_rr","params":{"c":1}}"#;
    assert!(run(&["order-check", "--law", srr, "--order", "1,0"]).status.success());
    let bad = run(&["order-check", "--law", srr, "--order", "0,1"]);
    assert_eq!(bad.status.code(), Some(4));
    assert_eq!(stdout_json(&bad)["translation"]["right"]["pass"], false);

    let conj = run(&["order-check", "--law", r#"{"family":"k_cd","params":{"c":1,"d":1}}"#, "--order", "0,1,2", "--normal", "1,2"]);
    assert!(conj.status.success());
    assert_eq!(stdout_json(&conj)["conjugation"]["pass"], true);
    let not_closed = run(&["order-check", "--law", r#"{"family":"sut3"}"#, "--order", "0,1,2", "--normal", "0,1"]);
    assert_eq!(not_closed.status.code(), Some(2));

    let axioms = run(&["axioms", "--law", r#"{"family":"t_k","params":{"k":1}}"#, "--samples", "200"]);
    assert!(axioms.status.success());
    assert_eq!(stdout_json(&axioms)["samples"], 200);

    let cocycle = run(&["cocycle-check", "--cocycle", r#"{"cocycle":{"cocycle":"heis","c":1}}"#]);
    assert_eq!(stdout_json(&cocycle)["residual"]["max_abs"], 0);
}

#[test]
fn json_file_input_and_output_file() {
    let input = scratch("law.json");
    std::fs::write(&input, HEIS).unwrap();
    let out_path = scratch("report.json");
    let out = run(&[
        "eval", "--json", input.to_str().unwrap(), "--op", "inv", "--a", "1,-2,3", "--out", out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out_path).unwrap().trim(), r#"{"result":[-1,2,-3]}"#);
    assert_eq!(run(&["eval", "--json", "/nonexistent/law.json", "--op", "inv", "--a", "1"]).status.code(), Some(2));
}

#[test]
fn catalog_lists_classes() {
    let v = stdout_json(&run(&["catalog", "--dim", "2"]));
    let labels: Vec<&str> = v["classes"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["R2_abelian", "Aff_plus", "Aff_minus"]);
    assert_eq!(run(&["catalog", "--dim", "4"]).status.code(), Some(2));
}

#[test]
fn selftest_is_deterministic_and_honest() {
    let a = run(&["selftest", "--samples", "50", "--seed", "3"]);
    let b = run(&["selftest", "--samples", "50", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 8);

    assert!(run(&["selftest", "--samples", "1"]).status.success());

    let strict = run(&["selftest", "--samples", "50", "--abs-tol", "1e-18", "--rel-tol", "1e-18"]);
    assert_eq!(strict.status.code(), Some(4));
    let v = stdout_json(&strict);
    let one_param = &v["criteria"][7];
    assert_eq!(one_param["pass"], false);
    let located = one_param["checks"].as_array().unwrap().iter().any(|c| c["detail"]["at"].is_array());
    assert!(located);
}

#[test]
fn invalid_run_settings_are_input_errors() {
    assert_eq!(run(&["selftest", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--abs-tol", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--box", "nan"]).status.code(), Some(2));
}
