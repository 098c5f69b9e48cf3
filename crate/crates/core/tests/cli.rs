use std::process::Command;

use springer_k::cli::{run, EXIT_CHECK_FAILED, EXIT_PASS, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("springer-k").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = invoke(&full);
    assert_eq!(code, EXIT_PASS, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn present_hook() {
    let v = json(&["present", "--lambda", "2,1", "--flavor", "EqK"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
    assert_eq!(v["ambient"]["invertible"], serde_json::json!(["u"]));
    let first = &v["generators"][0];
    assert_eq!(first["s"], 2);
    assert_eq!(first["subset"], serde_json::json!([1, 2]));
    assert_eq!(first["d"], 2);
}

#[test]
fn present_row_and_flag() {
    let v = json(&["present", "--lambda", "3"]);
    let linear: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|g| g["s"] == 1)
        .map(|g| g["poly"].as_str().unwrap())
        .collect();
    assert_eq!(linear, ["x1 - u1", "x2 - u1", "x3 - u1"]);
    let v = json(&["present", "--lambda", "1,1", "--flavor", "Flag"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
    assert_eq!(v["lambda"], serde_json::Value::Null);
}

#[test]
fn cohomology_prints_y() {
    let (code, out, _) = invoke(&["present", "--lambda", "2,1", "--flavor", "EqCoh"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("y1*y2"));
    assert!(!out.contains('x'));
}

#[test]
fn rank_examples() {
    for (lambda, flavor, expected) in [("2,1", "EqK", "3"), ("1,1,1,1", "EqCoh", "24"), ("5", "EqK", "1")] {
        let v = json(&["rank", "--lambda", lambda, "--flavor", flavor]);
        assert_eq!(v["expected"], expected);
        assert_eq!(v["got"], expected);
        assert_eq!(v["pass"], true);
        assert_eq!(v["seed"], 17);
        assert!(v.get("elapsed_ms").is_none());
    }
}

#[test]
fn fixed_point_listing() {
    assert_eq!(json(&["fixed-points", "--lambda", "2,1"])["count"], 3);
    assert_eq!(json(&["fixed-points", "--lambda", "4"])["points"], serde_json::json!([[1, 2, 3, 4]]));
    assert_eq!(json(&["fixed-points", "--lambda", "1,1,1"])["count"], 6);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "--lambda", "2,1", "--suite", "all"]);
    assert_eq!(v["pass"], true);
    let v = json(&["verify", "--lambda", "2,2", "--suite", "gkm"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    let v = json(&["verify", "--lambda", "1,1,1", "--suite", "flag-consistency"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn basis_examples() {
    assert_eq!(json(&["basis", "--lambda", "2,1"])["dimension"], 3);
    assert_eq!(json(&["basis", "--lambda", "3"])["monomials"], serde_json::json!(["1"]));
    assert_eq!(json(&["basis", "--lambda", "1,1,1"])["dimension"], 6);
}

#[test]
fn lex_order_gives_same_dimension() {
    let v = json(&["basis", "--lambda", "2,2", "--order", "lex"]);
    assert_eq!(v["order"], "lex");
    assert_eq!(v["dimension"], 6);
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["present", "--lambda", "2,x"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["present", "--lambda", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["present", "--lambda", "2,1", "--flavor", "Bogus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "--lambda", "2,1", "--suite", "bogus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_PASS);
}

#[test]
fn unsorted_lambda_warns() {
    let (code, out, err) = invoke(&["fixed-points", "--lambda", "1,2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(err.contains("warning"));
    assert!(out.starts_with("lambda: (2,1)"));
}

#[test]
fn wrong_expectation_is_a_check_failure() {
    // ordinary K-theory of the full flag has no parameters but the same rank
    let (code, out, _) = invoke(&["rank", "--lambda", "1,1,1", "--flavor", "OrdK"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert_ne!(EXIT_CHECK_FAILED, EXIT_PASS);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--lambda", "2,2,1", "--suite", "all", "--format", "json"][..],
        &["basis", "--lambda", "3,1", "--format", "text"],
        &["present", "--lambda", "3,2", "--flavor", "OrdK"],
    ] {
        assert_eq!(invoke(args), invoke(args));
    }
}

#[test]
fn timings_flag_adds_elapsed() {
    let (_, out, _) = invoke(&["rank", "--lambda", "2,1", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn binary_reads_seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_springer-k");
    let output = Command::new(bin)
        .args(["basis", "--lambda", "2,1", "--format", "json"])
        .env("SPRINGER_K_SEED", "5")
        .output()
        .unwrap();
    assert!(output.status.success());
    let v: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(v["seed"], 5);

    let output = Command::new(bin).args(["rank", "--lambda", "2,,1"]).output().unwrap();
    assert_eq!(output.status.code(), Some(EXIT_USAGE));
}
