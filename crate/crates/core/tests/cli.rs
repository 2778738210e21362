use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn maxpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxpi")).args(args).output().unwrap()
}

const C5: &str = "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn five_cycle_human_output() {
    let input = file(C5);
    let out = maxpi(&["--input", input.path().to_str().unwrap(), "--class", "chordal", "--mode", "auto"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("size 4"), "{text}");
    assert!(text.contains("vertices 1 2 3 4"), "{text}");
}

#[test]
fn json_schema() {
    let input = file(C5);
    let out = maxpi(&["--input", input.path().to_str().unwrap(), "--json", "--oracle-check"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "mode",
        "class",
        "n",
        "m",
        "optimum_size",
        "vertices",
        "branches",
        "candidates_enumerated",
        "two_table_columns",
        "elapsed_ms",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["step1", "step2", "step3", "step4", "step5", "caseA", "b11", "b12", "b13", "b2"] {
        assert!(v["branches"].get(key).is_some(), "missing branches.{key}");
    }
    assert_eq!(v["optimum_size"], 4);
    assert_eq!(v["vertices"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn malformed_line_exits_with_parse_status() {
    let input = file("p edge 3 1\ne 1\n");
    let out = maxpi(&["--input", input.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

#[test]
fn invalid_constants_exit_with_status_two() {
    let input = file(C5);
    let constants = file("alpha = 0.5\n");
    let args = ["--input", input.path().to_str().unwrap(), "--constants", constants.path().to_str().unwrap()];
    assert_eq!(maxpi(&args).status.code(), Some(2));
    // brute force ignores the schedule
    let mut brute = args.to_vec();
    brute.extend(["--mode", "brute"]);
    assert_eq!(maxpi(&brute).status.code(), Some(0));
    let garbled = file("alpha 0.5\n");
    let args = ["--input", input.path().to_str().unwrap(), "--constants", garbled.path().to_str().unwrap()];
    assert_eq!(maxpi(&args).status.code(), Some(3));
}

#[test]
fn structured_on_twenty_vertices_takes_case_a() {
    // a caterpillar on 20 vertices: spine 1..10, one leaf per spine vertex
    let mut text = String::from("p edge 20 19\n");
    for i in 1..10 {
        text.push_str(&format!("e {} {}\n", i, i + 1));
    }
    for i in 1..=10 {
        text.push_str(&format!("e {} {}\n", i, i + 10));
    }
    let input = file(&text);
    let out = maxpi(&["--input", input.path().to_str().unwrap(), "--mode", "structured", "--json", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["optimum_size"], 20);
    assert!(v["branches"]["caseA"].as_u64().unwrap() > 0);
}

#[test]
fn overlay_family_and_trace() {
    let input = file("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    let claw = file("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    let out = maxpi(&[
        "--input",
        input.path().to_str().unwrap(),
        "--class",
        "interval+F",
        "--overlay",
        claw.path().to_str().unwrap(),
        "--trace",
        "--oracle-check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("size 3"), "{text}");
    assert!(text.contains("oracle agree 3"), "{text}");
    let trace = String::from_utf8(out.stderr).unwrap();
    assert!(trace.lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
    assert!(trace.contains("\"event\":\"start\""));
}

#[test]
fn oracle_cap_from_environment() {
    let input = file(C5);
    let out = Command::new(env!("CARGO_BIN_EXE_maxpi"))
        .args(["--input", input.path().to_str().unwrap(), "--oracle-check"])
        .env("MAXPI_ORACLE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("oracle skipped"));
}

#[test]
fn unknown_class_and_missing_file() {
    let input = file(C5);
    assert_eq!(maxpi(&["--input", input.path().to_str().unwrap(), "--class", "perfect"]).status.code(), Some(1));
    assert_eq!(maxpi(&["--input", "/nonexistent/graph.txt"]).status.code(), Some(1));
}
