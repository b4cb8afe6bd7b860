use std::path::{Path, PathBuf};
use std::process::Command;

use latpoly::instances::{an1_instance, example1, nvs04, random_instance, random_nonnegative_instance};
use latpoly_cli::instance_file::InstanceFile;
use tempfile::TempDir;

fn latpoly(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_latpoly")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &Path, name: &str, builder: &[&str]) -> PathBuf {
    let mut args = vec!["generate"];
    args.extend_from_slice(builder);
    let (text, _, code) = latpoly(&args);
    assert_eq!(code, 0);
    write(dir, name, &text)
}

#[test]
fn generate_round_trips_every_builder() {
    let cases: Vec<(Vec<&str>, latpoly::instances::InstanceBundle)> = vec![
        (vec!["example1"], example1()),
        (vec!["nvs04"], nvs04()),
        (vec!["an1", "--a", "3", "--b", "7", "--c", "6"], an1_instance(3, 7, 6).unwrap()),
        (
            vec!["random", "--dim", "2", "--degree", "3", "--radius", "5", "--seed", "7"],
            random_instance(2, 3, 5, 7).unwrap(),
        ),
        (
            vec!["random", "--dim", "3", "--degree", "2", "--radius", "2", "--seed", "1", "--nonnegative"],
            random_nonnegative_instance(3, 2, 2, 1).unwrap(),
        ),
    ];
    for (args, bundle) in cases {
        let mut full = vec!["generate"];
        full.extend(args);
        let (text, _, code) = latpoly(&full);
        assert_eq!(code, 0);
        assert_eq!(InstanceFile::parse(&text).unwrap().to_bundle().unwrap(), bundle);
    }
}

#[test]
fn count_and_oracle_on_example1() {
    let dir = TempDir::new().unwrap();
    let file = generated(dir.path(), "e1.json", &["example1"]);
    let f = file.to_str().unwrap();
    let (out, _, code) = latpoly(&["count", f]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["count:", "2"]));

    let (out, _, code) = latpoly(&["--format", "json", "oracle", f, "--k", "1"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["count"], "2");
    assert_eq!(doc["power_sum"], "8001");
    assert_eq!(doc["optimum"], "8000");
    assert_eq!(doc["point"]["coordinates"], serde_json::json!(["2", "1000"]));
}

#[test]
fn json_bounds_and_optimize() {
    let dir = TempDir::new().unwrap();
    let file = generated(dir.path(), "e1.json", &["example1"]);
    let f = file.to_str().unwrap();
    let (out, _, code) = latpoly(&["--format", "json", "bounds", f, "--k", "1"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["rows"][0]["lower"]["lower"], "8001/2");
    assert_eq!(doc["rows"][0]["lower"]["decimal"], "4000.500000");
    assert_eq!(doc["rows"][0]["upper"]["decimal"], "8001.000000");

    let (out, _, code) = latpoly(&["--format", "json", "optimize", f]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["optimum"], "8000");
    assert_eq!(doc["status"], "optimal");
}

#[test]
fn minimization_is_reported_in_its_own_sense() {
    let dir = TempDir::new().unwrap();
    let file = generated(dir.path(), "an1.json", &["an1", "--a", "4", "--b", "5", "--c", "4"]);
    let f = file.to_str().unwrap();
    let (out, _, code) = latpoly(&["--format", "json", "oracle", f]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["sense"], "min");
    assert_eq!(doc["optimum"], "0");

    let line = write(
        dir.path(),
        "line.json",
        r#"{"dimension": 1, "constraints": [{"coefficients": [1], "relation": "<=", "rhs": 2}, {"coefficients": [1], "relation": ">=", "rhs": -1}],
            "objective": [{"coefficient": 3, "exponents": [1]}], "metadata": {"sense": "min"}}"#,
    );
    let (out, _, code) = latpoly(&["--format", "json", "optimize", line.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["solved_as"], "-f - L");
    assert_eq!(doc["optimum"], "-3");

    let (_, err, code) = latpoly(&["fptas", f, "--epsilon", "1/2"]);
    assert_eq!(code, 8, "{err}");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let obj = r#""objective": [{"coefficient": 1, "exponents": [1]}]"#;
    let bad_json = write(d, "bad.json", "{\n  \"dimension\": 1,\n  \"constraints\": [\n    {\"coefficients\": [1.5], \"relation\": \"<=\", \"rhs\": 1}\n  ],\n  \"objective\": []\n}\n");
    let (_, err, code) = latpoly(&["count", bad_json.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("line 4"), "{err}");

    let (_, _, code) = latpoly(&["count", d.join("missing.json").to_str().unwrap()]);
    assert_eq!(code, 3);

    let empty = write(
        d,
        "empty.json",
        &format!(r#"{{"dimension": 1, "constraints": [{{"coefficients": [3], "relation": "<=", "rhs": 2}}, {{"coefficients": [3], "relation": ">=", "rhs": 1}}], {obj}, "metadata": {{"nonnegative": true}}}}"#),
    );
    let (_, _, code) = latpoly(&["bounds", empty.to_str().unwrap()]);
    assert_eq!(code, 4);

    let unbounded = write(
        d,
        "unbounded.json",
        &format!(r#"{{"dimension": 1, "constraints": [{{"coefficients": [1], "relation": ">=", "rhs": 0}}], {obj}}}"#),
    );
    let (_, _, code) = latpoly(&["count", unbounded.to_str().unwrap()]);
    assert_eq!(code, 5);

    let e1 = generated(d, "e1.json", &["example1"]);
    let e1 = e1.to_str().unwrap();
    let (_, _, code) = latpoly(&["oracle", e1, "--budget", "10"]);
    assert_eq!(code, 6);
    let (_, _, code) = latpoly(&["optimize", e1, "--k-max", "1"]);
    assert_eq!(code, 7);
    let (_, _, code) = latpoly(&["fptas", e1, "--epsilon", "3/2"]);
    assert_eq!(code, 8);
    let (_, _, code) = latpoly(&["fptas", e1, "--epsilon", "abc"]);
    assert_eq!(code, 2);
    let (_, _, code) = latpoly(&["bounds", e1, "--k", "0"]);
    assert_eq!(code, 2);
    let (_, _, code) = latpoly(&["frobnicate"]);
    assert_eq!(code, 2);

    let flat = write(
        d,
        "flat.json",
        &format!(r#"{{"dimension": 1, "constraints": [{{"coefficients": [1], "relation": "<=", "rhs": 0}}, {{"coefficients": [1], "relation": ">=", "rhs": 0}}], {obj}}}"#),
    );
    let (_, _, code) = latpoly(&["count", flat.to_str().unwrap()]);
    assert_eq!(code, 8);

    let signed = generated(d, "r.json", &["random", "--dim", "1", "--degree", "1", "--radius", "2", "--seed", "3"]);
    let (_, _, code) = latpoly(&["bounds", signed.to_str().unwrap()]);
    assert_eq!(code, 8);
    let (_, _, code) = latpoly(&["bounds", signed.to_str().unwrap(), "--shift"]);
    assert_eq!(code, 0);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = generated(dir.path(), "r.json", &["random", "--dim", "2", "--degree", "2", "--radius", "3", "--seed", "5"]);
    let f = file.to_str().unwrap();
    for args in [
        vec!["count", f],
        vec!["bounds", f, "--k", "4", "--all", "--shift"],
        vec!["--format", "json", "optimize", f, "--k-max", "6"],
        vec!["fptas", f, "--epsilon", "1/4", "--shift", "--recover-point"],
        vec!["oracle", f, "--k", "2"],
    ] {
        let first = latpoly(&args);
        let second = latpoly(&args);
        assert_eq!(first.0, second.0);
        assert_eq!(first.2, second.2);
    }
}

#[test]
fn timing_goes_to_stderr_only() {
    let dir = TempDir::new().unwrap();
    let file = generated(dir.path(), "e1.json", &["example1"]);
    let (plain, _, _) = latpoly(&["count", file.to_str().unwrap()]);
    let (timed, err, _) = latpoly(&["--timing", "count", file.to_str().unwrap()]);
    assert_eq!(plain, timed);
    assert!(err.starts_with("elapsed: "));
}
