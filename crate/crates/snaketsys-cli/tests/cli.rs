//! End-to-end tests of the `snaketsys` binary: outputs, formats and exit codes.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

/// Runs the binary with `args`, feeding `stdin`; returns (exit code, stdout, stderr).
fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_snaketsys"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const UNTWISTED_SNAKE: &str =
    r#"{"flavor":"untwisted","xi":[2,4,6],"points":[{"i":2,"k2":0},{"i":2,"k2":4},{"i":1,"k2":10}]}"#;
const TWISTED_SNAKE: &str =
    r#"{"flavor":"twisted","xi":[2,3,4],"n0":2,"points":[{"i":3,"k2":4},{"i":2,"k2":9},{"i":2,"k2":11}]}"#;

fn points(v: &Value) -> Vec<(u64, i64)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| (p["i"].as_u64().unwrap(), p["k2"].as_i64().unwrap()))
        .collect()
}

#[test]
fn tsystem_untwisted_json() {
    let (code, out, _) = run(&["tsystem", "--format", "json", "--realization", "qdatum-a"], UNTWISTED_SNAKE);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(points(&v["Q"]), vec![(1, 2)]);
    assert_eq!(points(&v["R"]), vec![(3, 2), (3, 6)]);
    assert_eq!(points(&v["D"]), vec![(2, 4)]);
    assert_eq!(v["hypotheses_ok"], Value::Bool(true));
    assert_eq!(v["flags"]["prime"], Value::Bool(true));
    assert_eq!(v["monomials"]["D"], Value::String("Y[2,-2]".into()));
}

#[test]
fn tsystem_twisted_json_and_latex() {
    let (code, out, _) = run(&["tsystem", "--format", "json"], TWISTED_SNAKE);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(points(&v["Q"]), vec![(2, 5), (1, 10)]);
    assert!(points(&v["R"]).is_empty());
    let (code, out, _) = run(&["tsystem", "--format", "latex"], TWISTED_SNAKE);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 \\to \\mathbf{S}^{\\Theta}\\big((2,5/2),(1,5)\\big) \\otimes \\mathbf{1}"), "{out}");
}

#[test]
fn non_prime_snake_exits_3() {
    let snake = r#"{"flavor":"untwisted","xi":[2,4,6],"points":[{"i":2,"k2":0},{"i":2,"k2":12}]}"#;
    let (code, _, err) = run(&["tsystem"], snake);
    assert_eq!(code, 3);
    assert!(err.contains("[0, 1]"), "{err}");
    let (code, out, _) = run(&["snake-check", "--format", "json"], snake);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["prime"], Value::Bool(false));
}

#[test]
fn parse_and_config_errors() {
    assert_eq!(run(&["tsystem"], "{").0, 4);
    assert_eq!(run(&["--xi", "1,2", "quiver"], "").0, 2);
    assert_eq!(run(&["quiver"], "").0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"], "").0, 2);
}

#[test]
fn quiver_renderings() {
    let (code, out, _) = run(&["quiver", "--xi", "4,2,4,6,8", "--k-lo", "0", "--k-hi", "8"], "");
    assert_eq!(code, 0);
    assert!(out.contains("15 in the window"), "{out}");
    let (code, out, _) = run(&["quiver", "--n", "1", "--format", "json"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    let (code, out, _) = run(&["quiver", "--flavor", "twisted", "--n", "5", "--format", "dot"], "");
    assert_eq!(code, 0);
    // The middle row is half-integral; labels use doubled heights.
    assert!(out.contains("\"3:3\""), "{out}");
}

#[test]
fn translate_and_rho_agree() {
    let snake = r#"{"flavor":"twisted","xi":[2,4,6,7,8,10,12],"n0":4,"points":[{"i":5,"k2":8},{"i":5,"k2":12},{"i":4,"k2":17},{"i":4,"k2":19}]}"#;
    let (code, out, _) = run(&["translate", "--format", "json"], snake);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(points(&v["points"]), vec![(5, 6), (5, 10), (5, 14), (4, 20)]);
    let datum = r#"{"carrier":"gamma-THETA","n":7,"entries":[{"i":5,"k2":8,"c":1},{"i":5,"k2":12,"c":1},{"i":4,"k2":17,"c":1},{"i":4,"k2":19,"c":1}]}"#;
    let (code, out, _) = run(&["rho", "--format", "json"], datum);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["carrier"], Value::String("gamma-theta".into()));
    let got: Vec<(u64, i64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            assert_eq!(e["c"], 1);
            (e["i"].as_u64().unwrap(), e["k2"].as_i64().unwrap())
        })
        .collect();
    assert_eq!(got, vec![(5, 6), (5, 10), (5, 14), (4, 20)]);
}

#[test]
fn reineke_query() {
    let datum = r#"{"carrier":"delta:0","entries":[{"i":2,"k2":2,"c":1}]}"#;
    let (code, out, _) = run(&["--n", "5", "reineke", "--j", "2", "--format", "json"], datum);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["epsilon"], 1);
    assert!(v["epsilon_star"].is_u64());
    // Without --n and without "n" in the file the rank is unknown.
    assert_eq!(run(&["reineke"], datum).0, 4);
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--suite", "rho", "--trials", "10", "--seed", "7"], "");
    let b = run(&["verify", "--suite", "rho", "--trials", "10", "--seed", "7"], "");
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}
