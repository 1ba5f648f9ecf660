//! End-to-end runs of the `cliffinv` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn cliffinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffinv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn molien_series_of_the_smallest_real_group() {
    let out = cliffinv(&["group", "molien", "--kind", "real", "--m", "1", "--order", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "group molien");
    assert_eq!(v["result"]["order"], "16");
    let series: Vec<i64> = v["result"]["molien"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    assert_eq!(series, [1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]);
}

#[test]
fn group_orders() {
    let v = json(&cliffinv(&["group", "order", "--kind", "real", "--m", "2"]));
    assert_eq!(v["result"]["order"], "2304");
    let v = json(&cliffinv(&["group", "order", "--kind", "complex", "--m", "1"]));
    assert_eq!(v["result"]["order"], "192");
}

#[test]
fn runge_for_length_eight() {
    let out = cliffinv(&["verify", "runge", "--length", "8", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["result"]["fixed_space_dim"], 2);
}

#[test]
fn hm_matches_the_hamming_code() {
    let out = cliffinv(&["hm", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["equals_cwe_h8"], true);
}

#[test]
fn negative_controls_exit_one() {
    let out = cliffinv(&["verify", "tensor", "--m", "2", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["ok"], false);
    let out = cliffinv(&["verify", "span-order", "--m", "2", "--extraspecial"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cliffinv(&["verify", "tensor", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn error_exit_codes() {
    assert_eq!(cliffinv(&["cwe", "--code", "no-such-code", "--genus", "1"]).status.code(), Some(3));
    assert_eq!(cliffinv(&["group", "order", "--kind", "real", "--m", "2", "--max-order", "100"]).status.code(), Some(4));
    assert_eq!(cliffinv(&["verify", "span-order", "--m", "1"]).status.code(), Some(5));
    assert_eq!(cliffinv(&["group", "order", "--kind", "real"]).status.code(), Some(2));
    assert_eq!(cliffinv(&["design-test", "--m", "1", "--coords", "1,0"]).status.code(), Some(2));
}

#[test]
fn code_files_and_output_files() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("i2x4.txt");
    std::fs::write(&code, "# four copies of i2\n11000000\n00110000\n00001100\n00000011\n").unwrap();
    let out_path = dir.path().join("out.json");
    let out = cliffinv(&[
        "cwe",
        "--code",
        code.to_str().unwrap(),
        "--genus",
        "1",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["result"]["cwe"]["polynomial"], "x0^8 + 4*x0^6*x1^2 + 6*x0^4*x1^4 + 4*x0^2*x1^6 + x1^8");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1102\n").unwrap();
    assert_eq!(cliffinv(&["cwe", "--code", bad.to_str().unwrap(), "--genus", "1"]).status.code(), Some(5));
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--seed", "7", "verify", "runge", "--length", "12", "--genus", "1", "--p", "3", "--samples", "4"];
    let a = cliffinv(&args);
    let b = cliffinv(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_format() {
    let out = cliffinv(&["--format", "text", "lattice", "build", "--m", "1", "--balanced"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("lattice build (ok)\n"));
    assert!(s.contains("det: 2"));
    assert!(s.contains("sqrt2"));
}

#[test]
fn shadow_identities_hold_for_h8() {
    let out = cliffinv(&["shadow", "--code", "h8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["identities"]["hadamard_symmetry"], true);
}

#[test]
fn selftest_subset() {
    let out = cliffinv(&["selftest", "--only", "1,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["total"], 2);
    let out = cliffinv(&["selftest", "--only", "8a"]);
    assert_eq!(out.status.code(), Some(1));
}
