use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use ypattern::cli::{run, Io};

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("ypattern").chain(args.iter().copied()),
        &mut Io {
            stdin: &mut input,
            stdout: &mut out,
            stderr: &mut err,
        },
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_pentagon_exits_zero() {
    let (code, out, _) = call(
        &[
            "verify", "--pair", "A2", "A1", "--system", "boxtimes", "--output", "json",
        ],
        "",
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["minimal_period"], 5);
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["flags"]["seed"], "0");
}

#[test]
fn direct_system_period_divides_twelve() {
    let (code, out, _) = call(
        &[
            "verify", "--pair", "A2", "A2", "--system", "direct", "--output", "json",
        ],
        "",
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(12 % v["minimal_period"].as_u64().unwrap(), 0);
}

#[test]
fn bad_pair_exits_two() {
    let (code, _, err) = call(&["verify", "--pair", "Z9", "A1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("Z9"));
    assert_eq!(call(&["verify", "--pair", "A2"], "").0, 2);
    assert_eq!(call(&["verify", "--pair", "A2", "A1", "--bogus"], "").0, 2);
    assert_eq!(call(&["verify"], "").0, 2);
}

#[test]
fn short_bound_exits_one_and_formats_agree() {
    let (code, text, _) = call(&["verify", "--pair", "A2", "A1", "--rounds", "3"], "");
    assert_eq!(code, 1);
    assert!(text.contains("verdict         counterexample"));
    let (code, json, _) = call(
        &[
            "verify", "--pair", "A2", "A1", "--rounds", "3", "--output", "json",
        ],
        "",
    );
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], "counterexample");
    assert!(v["counterexample"]["reason"].is_string());
}

#[test]
fn big_products_need_the_flag() {
    let (code, _, err) = call(&["verify", "--pair", "D5", "A3"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--big"));
}

#[test]
fn trace_goes_to_stderr() {
    let (code, out, err) = call(&["verify", "--pair", "A2", "A2", "--trace"], "");
    assert_eq!(code, 0);
    assert_eq!(err.lines().count(), 6);
    assert!(!out.contains("round 1/6"));
}

#[test]
fn fold_reports_lift_and_orbits() {
    let (code, out, _) = call(&["fold", "--pair", "B2", "A1", "--output", "json"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lift"]["lifted"][0], "A3");
    assert_eq!(v["lift"]["d"], serde_json::json!([1, 2]));
    let (code, out, _) = call(&["fold", "--pair", "G2", "A1"], "");
    assert_eq!(code, 0);
    assert!(out.contains("{(1,1),(1',1),(1'',1)}"));
    assert_eq!(call(&["fold", "--pair", "A2", "A1"], "").0, 2);
    assert_eq!(call(&["fold", "--pair", "A2", "A1", "--force"], "").0, 0);
}

#[test]
fn mutate_round_trips() {
    let (code, out, _) = call(
        &[
            "mutate",
            "--pair",
            "A2",
            "A2",
            "--sequence",
            "boxtimes",
            "--output",
            "json",
        ],
        "",
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["initial"], v["final"]);
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);

    let q = r#"{"vertices":["a","b","c"],"b":[[0,1,0],[-1,0,-1],[0,1,0]]}"#;
    let (code, out, _) = call(&["mutate", "--output", "json"], q);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["initial"], v["final"]);
    let (_, out, _) = call(
        &[
            "mutate",
            "--sequence",
            "b",
            "b",
            "--output",
            "json",
            "--seed-data",
        ],
        q,
    );
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["initial"], v["final"]);
    assert_eq!(v["steps"][0]["seed"]["f"][1], "1 + y2");
}

#[test]
fn mutate_rejects_bad_input() {
    assert_eq!(call(&["mutate"], "not json").0, 2);
    let q = r#"{"vertices":["1","2"],"b":[[0,1],[-1,0]]}"#;
    assert_eq!(call(&["mutate", "--sequence", "7"], q).0, 2);
}

#[test]
fn products_lists_three_quivers() {
    let (code, out, _) = call(&["products", "--pair", "A2", "A2", "--output", "json"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    for k in ["tensor", "triangle", "square"] {
        assert_eq!(v[k]["vertices"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn binary_uses_the_environment_default_output() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ypattern"))
        .args(["verify", "--pair", "A1", "A1"])
        .env("YPATTERN_OUTPUT", "json")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["minimal_period"], 2);
}
