//! End-to-end tests of the command-line interface: JSON shapes, golden
//! values, determinism, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfaffian-ext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn terms_of(value: &serde_json::Value) -> Vec<(i64, Vec<i64>, i64, u64)> {
    value["terms"]
        .as_array()
        .expect("terms array")
        .iter()
        .map(|t| {
            (
                t["j"].as_i64().unwrap(),
                t["lambda"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_i64().unwrap())
                    .collect(),
                t["degree"].as_i64().unwrap(),
                t["mult"].as_u64().unwrap(),
            )
        })
        .collect()
}

#[test]
fn ext_reproduces_the_golden_table() {
    let value = stdout_json(&["ext", "--n", "6", "--ideal", "pow:4:2", "--deg", "-18..-6"]);
    let terms = terms_of(&value);
    let expected: Vec<(i64, Vec<i64>, i64, u64)> = vec![
        (6, vec![4, 4, 3, 3, 3, 3], -10, 1),
        (6, vec![3, 3, 3, 3, 3, 3], -9, 1),
        (6, vec![4, 4, 3, 3, 2, 2], -9, 1),
        (6, vec![3, 3, 3, 3, 2, 2], -8, 1),
        (6, vec![4, 4, 3, 3, 1, 1], -8, 1),
        (6, vec![3, 3, 3, 3, 1, 1], -7, 1),
        (6, vec![4, 4, 3, 3, 0, 0], -7, 1),
        (6, vec![3, 3, 3, 3, 0, 0], -6, 1),
        (6, vec![4, 4, 3, 3, -1, -1], -6, 1),
        (15, vec![6, 6, 6, 6, 6, 6], -18, 1),
    ];
    assert_eq!(terms, expected);

    let value = stdout_json(&["ext", "--n", "6", "--ideal", "gens:2,1", "--deg", "-18..-6"]);
    let terms = terms_of(&value);
    let expected: Vec<(i64, Vec<i64>, i64, u64)> = vec![
        (6, vec![3, 3, 3, 3, 3, 3], -9, 1),
        (6, vec![3, 3, 3, 3, 2, 2], -8, 1),
        (6, vec![3, 3, 3, 3, 1, 1], -7, 1),
        (6, vec![3, 3, 3, 3, 0, 0], -6, 1),
        (15, vec![6, 6, 6, 6, 6, 6], -18, 1),
        (15, vec![6, 6, 6, 6, 5, 5], -17, 1),
    ];
    assert_eq!(terms, expected);
}

#[test]
fn ext_output_is_byte_deterministic() {
    let args = ["ext", "--n", "6", "--ideal", "pow:4:2", "--deg", "-18..-6"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn ext_empty_window_yields_no_terms() {
    // Degrees strictly below every term of the decomposition.
    let value = stdout_json(&["ext", "--n", "6", "--ideal", "pfaff:4", "--deg", "-30..-20"]);
    assert!(terms_of(&value).is_empty());
}

#[test]
fn reg_outputs() {
    let value = stdout_json(&["reg", "--n", "6", "--ideal", "pow:4:2"]);
    assert_eq!(value["reg_quotient"], 4);
    assert_eq!(value["reg_ideal"], 5);
    assert_eq!(value["route"], "filtration");
    assert_eq!(value["linear_resolution"], false);

    let value = stdout_json(&["reg", "--n", "8", "--ideal", "sym:4:6"]);
    assert_eq!(value["reg_ideal"], 12);
    assert_eq!(value["route"], "closed-form");

    let value = stdout_json(&["reg", "--n", "6", "--ideal", "gens:1,1"]);
    assert_eq!(value["reg_ideal"], 4);

    let value = stdout_json(&["reg", "--n", "6", "--ideal", "pow:6:3"]);
    assert_eq!(value["reg_ideal"], 9);
    assert_eq!(value["linear_resolution"], true);
}

#[test]
fn maps_roles_and_identity() {
    let value = stdout_json(&[
        "maps", "--n", "6", "--ideal", "gens:2,1", "--ideal2", "pow:4:2", "--deg", "-18..-6",
    ]);
    let roles: Vec<(&str, i64)> = value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["role"].as_str().unwrap(), t["j"].as_i64().unwrap()))
        .collect();
    assert!(roles.contains(&("kernel", 15)));
    assert!(roles.contains(&("cokernel", 6)));
    assert!(!roles.contains(&("kernel", 6)));
    assert!(!roles.contains(&("cokernel", 15)));

    let value = stdout_json(&[
        "maps", "--n", "6", "--ideal", "pow:4:2", "--ideal2", "pow:4:2", "--deg", "-18..-6",
    ]);
    assert!(value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|t| t["role"] == "image"));
}

#[test]
fn maps_rejects_non_nested_ideals() {
    let out = run(&[
        "maps", "--n", "6", "--ideal", "pow:4:2", "--ideal2", "gens:2,1", "--deg", "-18..-6",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_with_two() {
    let out = run(&["ext", "--n", "6", "--ideal", "nope:3", "--deg", "-6..0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["ext", "--n", "6", "--ideal", "pfaff:4", "--deg", "oops"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_with_one() {
    // Odd Pfaffian size and out-of-range k are validation failures.
    let out = run(&["reg", "--n", "6", "--ideal", "pfaff:5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["reg", "--n", "6", "--ideal", "pow:8:2"]);
    assert_eq!(out.status.code(), Some(1));
    // The unit ideal has no regularity.
    let out = run(&["reg", "--n", "6", "--ideal", "gens:"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cohomology_csv_table() {
    let out = run(&[
        "cohomology",
        "--n",
        "6",
        "--ideal",
        "pfaff:4",
        "--q",
        "0..8",
        "--twist",
        "-6..0",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q,twist,dim"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.contains(&"0,0,1"));
    assert!(rows.contains(&"8,-6,1"));
    assert!(rows.contains(&"8,-1,0"));
    assert_eq!(rows.len(), 9 * 7);
}

#[test]
fn kodaira_passes_on_the_square() {
    let value = stdout_json(&["kodaira", "--n", "6", "--ideal", "pow:4:2"]);
    assert_eq!(value["report"]["pass"], true);
    assert_eq!(value["report"]["vanishing_threshold"], 8);
}

#[test]
fn selftest_quick_passes() {
    let out = run(&["selftest", "--scale", "quick", "--threads", "2"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["passed"], true);
}
