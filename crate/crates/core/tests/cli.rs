use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use surgery_gate::cli::{run_command, EXIT_INDETERMINATE, EXIT_INPUT, EXIT_OK};
use surgery_gate::io::{parse_knot_file, parse_knot_str, serialize_knot_file};

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/knots.json")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run_command(args);
    assert!(out.code == EXIT_OK || out.code == EXIT_INDETERMINATE, "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

#[test]
fn fixture_has_four_records_and_round_trips() {
    let knots = parse_knot_file(fixture()).unwrap();
    let names: Vec<&str> = knots.iter().map(|k| k.name.as_str()).collect();
    assert_eq!(names, ["unknot", "3_1", "4_1", "9_44"]);
    let text = serialize_knot_file(&knots);
    assert_eq!(parse_knot_str(&text).unwrap(), knots);
    assert_eq!(serialize_knot_file(&parse_knot_str(&text).unwrap()), text);
}

#[test]
fn cosmetic_check_9_44() {
    let f = fixture();
    let (_, v) =
        run_json(&["cosmetic-check", "--knots", f.to_str().unwrap(), "--name", "9_44", "--pmax", "10", "--qmax", "10"]);
    assert_eq!(v["command"], json!("cosmetic-check"));
    let r = &v["results"][0];
    assert_eq!(r["verdict"]["kind"], json!("NotObstructed"));
    assert!(r["verdict"]["candidates"].as_array().unwrap().contains(&json!("1/1")));
    assert!(r["checks"].as_array().unwrap().iter().any(|c| c["name"] == json!("euler_char_sum[1/1]")));
}

#[test]
fn cosmetic_check_batch_keeps_input_order() {
    let f = fixture();
    let (_, v) = run_json(&["cosmetic-check", "--knots", f.to_str().unwrap(), "--pmax", "5", "--qmax", "5"]);
    let knots: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["knot"].as_str().unwrap()).collect();
    assert_eq!(knots, ["unknot", "3_1", "4_1", "9_44"]);
    assert_eq!(v["results"][0]["excluded"], json!("trivial knot"));
    assert_eq!(v["results"][1]["verdict"]["kind"], json!("Obstructed"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let f = fixture();
    let args = ["cosmetic-check", "--knots", f.to_str().unwrap(), "--pmax", "6", "--qmax", "6"];
    assert_eq!(run_command(&args).stdout, run_command(&args).stdout);
    let hf = ["hfred", "--knots", f.to_str().unwrap(), "--name", "9_44", "--p", "3", "--q", "2"];
    assert_eq!(run_command(&hf).stdout, run_command(&hf).stdout);
}

#[test]
fn surgery_d_both_signs() {
    let f = fixture();
    let (_, v) = run_json(&["surgery-d", "--knots", f.to_str().unwrap(), "--name", "3_1", "--p", "1", "--q", "1"]);
    assert_eq!(v["results"][0]["d"], json!("-2/1"));
    let (_, v) = run_json(&["surgery-d", "--knots", f.to_str().unwrap(), "--name", "3_1", "--p", "-1", "--q", "1"]);
    assert_eq!(v["results"][0]["d"], json!("0/1"));
}

#[test]
fn hfred_figure_eight() {
    let f = fixture();
    let (_, v) = run_json(&["hfred", "--knots", f.to_str().unwrap(), "--name", "4_1", "--p", "1", "--q", "1"]);
    let r = &v["results"][0];
    assert_eq!(r["cone"]["tower_bottom"], json!("0/1"));
    assert_eq!(r["cone"]["reduced"], json!([{"grading": "-1/1", "rank": 1}]));
    assert_eq!(r["formula"]["reduced"], r["cone"]["reduced"]);
    assert_eq!(r["euler_characteristic"], json!(-1));
}

#[test]
fn casson_invariants() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let (_, v) = run_json(&["casson-walker", "--knots", f, "--name", "3_1", "--p", "1", "--q", "1"]);
    assert_eq!(v["results"][0]["lambda"], json!("1/1"));
    let (_, v) = run_json(&["casson-gordon", "--knots", f, "--name", "3_1", "--p", "3", "--q", "1"]);
    assert_eq!(v["results"][0]["tau"], json!("10/3"));
}

#[test]
fn strict_exit_code_only_for_indeterminate_results() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let args = ["casson-gordon", "--knots", f, "--name", "9_44", "--p", "3", "--q", "1"];
    assert_eq!(run_command(&args).code, EXIT_OK);
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(run_command(&strict).code, EXIT_INDETERMINATE);
    let decided = ["casson-gordon", "--knots", f, "--name", "3_1", "--p", "3", "--q", "1", "--strict"];
    assert_eq!(run_command(&decided).code, EXIT_OK);
}

#[test]
fn input_errors_exit_one() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let missing = run_command(&["surgery-d", "--knots", f, "--name", "5_2", "--p", "1", "--q", "1"]);
    assert_eq!(missing.code, EXIT_INPUT);
    assert!(missing.stderr.contains("5_2"));
    assert_eq!(
        run_command(&["surgery-d", "--knots", "/nonexistent.json", "--name", "x", "--p", "1", "--q", "1"]).code,
        EXIT_INPUT
    );
    assert_eq!(run_command(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(
        run_command(&["cosmetic-check", "--knots", f, "--name", "unknot", "--pmax", "3", "--qmax", "3"]).code,
        EXIT_INPUT
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": 1,\n  \"knots\": [\n    {\"name\": 3}]}").unwrap();
    let out = run_command(&["surgery-d", "--knots", bad.to_str().unwrap(), "--name", "x", "--p", "1", "--q", "1"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn enumerate_slopes_lists_residue_pairs() {
    let (_, v) = run_json(&["enumerate-slopes", "--pmax", "5", "--qmax", "3"]);
    let pairs: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["pair"].as_str().unwrap()).collect();
    assert_eq!(pairs, ["±1/1", "±1/2", "±1/3", "±2/1", "±5/2", "±5/3"]);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["lambda_lens"] == json!("0/1")));
}

#[test]
fn binary_matches_library_entry_point() {
    let out = Command::new(env!("CARGO_BIN_EXE_surgery-gate")).args(["lens", "--p", "3", "--q", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), run_command(&["lens", "--p", "3", "--q", "1"]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_surgery-gate")).args(["lens", "--p", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
