use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_euler-stirling"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, _) = run(&all);
    (
        code,
        serde_json::from_str(&out).expect("one well-formed JSON document"),
    )
}

#[test]
fn plain_examples() {
    assert_eq!(run(&["stirling2", "5", "3", "--format", "plain"]).1, "25\n");
    assert_eq!(run(&["bernoulli", "4", "--format", "plain"]).1, "-1/30\n");
    assert_eq!(run(&["bernoulli", "4", "--method", "oracle"]).1, "-1/30\n");
    assert_eq!(run(&["bernoulli", "1"]).1, "-1/2\n");
    assert_eq!(run(&["euler-poly", "2"]).1, "-1*x + 1*x^2\n");
    assert_eq!(run(&["euler-poly", "2", "--at", "3"]).1, "6\n");
    assert_eq!(run(&["apostol-bernoulli", "2", "--lambda", "2"]).1, "-4\n");
    assert_eq!(run(&["apostol-bernoulli", "0", "--lambda", "1"]).1, "1\n");
    assert_eq!(
        run(&["two-param-euler", "1", "--alpha", "1", "--lambda", "1"]).1,
        "-1/2 + 1*x\n"
    );
    assert_eq!(run(&["stirling1", "4", "-1"]).1, "0\n");
}

#[test]
fn json_records_have_fixed_shape() {
    let (code, v) = json(&["apostol-bernoulli", "3", "--lambda", "-3/2"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["command", "parameters", "status", "provenance", "result"]
    );
    assert_eq!(v["parameters"]["lambda"], "-3/2");
    let expected =
        euler_stirling::sequences::apostol_bernoulli_formula(3, &"-3/2".parse().unwrap()).unwrap();
    assert_eq!(v["result"], expected.to_string());

    let (_, poly) = json(&["euler-poly", "3"]);
    assert_eq!(poly["result"], serde_json::json!(["1/4", "0", "-3/2", "1"]));

    let (_, first) = json(&["two-param-euler", "3", "--alpha", "2", "--lambda", "-1/4"]);
    let (_, second) = json(&["two-param-euler", "3", "--alpha", "2", "--lambda", "-1/4"]);
    assert_eq!(first, second);
    assert!(first["note"].is_string());
}

#[test]
fn domain_errors_exit_one() {
    let (code, v) = json(&["apostol-bernoulli", "3", "--lambda", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error_kind"], "pole");

    let (code, v) = json(&["two-param-euler", "2", "--alpha", "1", "--lambda", "-1"]);
    assert_eq!((code, v["error_kind"].as_str()), (1, Some("pole")));
    let (code, v) = json(&["two-param-euler", "2", "--alpha", "0", "--lambda", "1"]);
    assert_eq!((code, v["error_kind"].as_str()), (1, Some("domain")));
    assert_eq!(run(&["bernoulli", "3", "--method", "formula"]).0, 1);
    assert_eq!(run(&["verify", "I1", "--k-max", "5", "--order", "4"]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["stirling2", "5"],
        &["bernoulli", "x"],
        &["apostol-bernoulli", "2", "--lambda", "1/0"],
        &["verify", "I9"],
        &["series", "dump", "apostol", "--order", "6"],
        &["stirling2", "5", "3", "--format", "yaml"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn verify_sweep_json() {
    let (code, v) = json(&["verify", "all", "--k-max", "4"]);
    assert_eq!(code, 0);
    let reports = v["result"].as_array().unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["total"], reports.len());
    for r in reports {
        assert_eq!(r["passed"], true);
        assert!(r["first_discrepancy"].is_null());
    }
    let i1: Vec<u64> = reports
        .iter()
        .filter(|r| r["identity_id"] == "I1")
        .map(|r| r["k"].as_u64().unwrap())
        .collect();
    assert_eq!(i1, [1, 2, 3, 4]);
    let g1 = reports.iter().filter(|r| r["identity_id"] == "G1").count();
    assert_eq!(g1, 4 * 25);
}

#[test]
fn verify_single_parameters() {
    let (code, v) = json(&[
        "verify", "G2", "--k-max", "3", "--alpha", "-3/2", "--lambda", "2",
    ]);
    assert_eq!(code, 0);
    let reports = v["result"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports
        .iter()
        .all(|r| r["alpha"] == "-3/2" && r["lambda"] == "2"));
}

#[test]
fn csv_has_header_then_rows() {
    let (code, out, _) = run(&["verify", "eq1.15", "--k-max", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(reader.headers().unwrap().get(0), Some("identity_id"));
    assert_eq!(reader.records().count(), 6);

    let (_, out, _) = run(&["stirling2", "5", "3", "--format", "csv"]);
    assert_eq!(out, "command,n,k,result\nstirling2,5,3,25\n");

    let (_, out, _) = run(&[
        "series",
        "dump",
        "recip-exp-plus-one",
        "--order",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "exponent,coefficient\n0,1/2\n1,-1/4\n2,0\n");
}

#[test]
fn series_dump_plain() {
    let (code, out, _) = run(&["series", "dump", "recip-exp-minus-one", "--order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "t^-1\t1\nt^0\t-1/2\nt^1\t1/12\nt^2\t0\nO(t^3)\n");
    let (code, out, _) = run(&["series", "dump", "apostol", "--lambda", "2", "--order", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("t^1\t1\nt^2\t-2\n"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
