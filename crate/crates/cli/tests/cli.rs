use std::path::Path;
use std::process::{Command, Output};

use qhsa_core::document::{parse_structure, parse_twist};
use qhsa_core::fixtures;
use qhsa_core::suite::{run_suites, Suite};

fn qhsa_in(env_dir: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qhsa"));
    cmd.args(args).env_remove(qhsa_cli::FIXTURE_DIR_VAR);
    if let Some(dir) = env_dir {
        cmd.env(qhsa_cli::FIXTURE_DIR_VAR, dir);
    }
    cmd.output().unwrap()
}

fn qhsa(args: &[&str]) -> Output {
    qhsa_in(None, args)
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn positive_fixture_exits_zero() {
    let out = qhsa(&["check", "h2.qhsa", "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let report = json(&out);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["fixture"], "h2");
    for suite in report["suites"].as_array().unwrap() {
        assert_ne!(suite["status"], "fail");
    }
}

#[test]
fn r_suites_are_skipped_without_r() {
    let report = json(&qhsa(&["check", "h2", "--format", "json"]));
    let qt = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["suite"] == "quasi-triangular")
        .unwrap();
    assert_eq!(qt["status"], "skipped");
    assert_eq!(qt["reason"], "no R-matrix");
}

#[test]
fn broken_pentagon_exits_one_with_witness() {
    let out = qhsa(&["check", "h2-broken-pentagon", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["status"], "fail");
    let entry = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["entries"].as_array().unwrap())
        .find(|e| e["id"] == "qb.pentagon")
        .unwrap();
    assert_eq!(entry["status"], "fail");
    assert!(!entry["witness"]["difference"].as_array().unwrap().is_empty());
}

#[test]
fn cocycle_negative_exits_one() {
    let out = qhsa(&["check", "h2ext", "--twistor", "f-odd"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fail twistor.cocycle"), "{}", stdout(&out));
    assert_eq!(code(&qhsa(&["check", "h2", "--twistor", "f-e11"])), 0);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.qhsa");
    let text = fixtures::structure_text("h2").unwrap().replacen("\"-1\"", "\"1/0\"", 1);
    std::fs::write(&bad, text).unwrap();
    let out = qhsa(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("phi[7]"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    assert_eq!(code(&qhsa(&["check", "no-such-structure"])), 2);
    assert_eq!(code(&qhsa(&["check", "h2", "--suites", "bogus"])), 2);
    assert_eq!(code(&qhsa(&["check", "h2ext", "--twistor", "f-theta"])), 2);
    assert_eq!(code(&qhsa(&["frobnicate"])), 2);
}

#[test]
fn validate_runs_only_the_structure_suites() {
    let report = json(&qhsa(&["validate", "h2-broken-pentagon", "--format", "json"]));
    assert_eq!(report["status"], "pass");
    let names: Vec<&str> = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["algebra", "structure"]);
}

#[test]
fn suite_selection() {
    let report = json(&qhsa(&["check", "ext", "--suites", "triangular,qqybe", "--format", "json"]));
    let names: Vec<&str> = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["triangular", "qqybe"]);
    assert_eq!(report["status"], "pass");
    assert_eq!(code(&qhsa(&["check", "h2r", "--suites", "triangular"])), 1);
}

#[test]
fn json_reports_are_deterministic() {
    let a = qhsa(&["check", "h2ext", "--format", "json"]);
    let b = qhsa(&["check", "h2ext", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("timing"));
    let timed = json(&qhsa(&["check", "h2ext", "--format", "json", "--timing"]));
    assert!(timed["timing"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn report_written_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h2.report.json");
    let out = qhsa(&["check", "h2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let direct = qhsa(&["check", "h2", "--format", "json"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

fn transform(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.qhsa");
    let mut full = vec!["transform"];
    full.extend_from_slice(args);
    full.extend(["--output", path.to_str().unwrap()]);
    let out = qhsa(&full);
    let text = std::fs::read_to_string(&path).unwrap_or_default();
    (code(&out), text)
}

#[test]
fn opposite_of_h2_is_h2() {
    let (code, text) = transform(&["h2", "--opposite", "--name", "h2"]);
    assert_eq!(code, 0);
    assert_eq!(text, fixtures::structure_text("h2").unwrap());
}

#[test]
fn prime_of_ext_is_ext() {
    let (code, text) = transform(&["ext", "--prime", "--name", "ext"]);
    assert_eq!(code, 0);
    assert_eq!(text, fixtures::structure_text("ext").unwrap());
}

#[test]
fn tensor_of_h2_and_ext_is_the_bundled_product() {
    let (code, text) = transform(&["h2", "--tensor", "ext", "--name", "h2ext"]);
    assert_eq!(code, 0);
    assert_eq!(text, fixtures::structure_text("h2ext").unwrap());
    assert_eq!(transform(&["h2", "--tensor", "h2r"]).0, 2);
}

#[test]
fn twisted_output_passes_every_suite() {
    let (code, text) = transform(&["h2", "--twist", "f-e11"]);
    assert_eq!(code, 0);
    let h = parse_structure(&text).unwrap().to_structure().unwrap();
    assert_eq!(h.name(), "h2-twisted");
    assert!(run_suites(&h, &Suite::defaults()).passed());

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h2-twisted.qhsa");
    std::fs::write(&file, &text).unwrap();
    assert_eq!(code_of(&["check", file.to_str().unwrap()]), 0);
}

fn code_of(args: &[&str]) -> i32 {
    code(&qhsa(args))
}

#[test]
fn invalid_twistor_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let odd = dir.path().join("odd.twist");
    std::fs::write(
        &odd,
        "{\n  \"name\": \"odd\",\n  \"field\": \"rational\",\n  \"dimension\": 2,\n  \"element\": [\n    [0, 0, \"1\"],\n    [0, 1, \"1\"]\n  ]\n}\n",
    )
    .unwrap();
    let out = qhsa(&["transform", "ext", "--twist", odd.to_str().unwrap(), "--output", "unused.qhsa"]);
    assert_eq!(code(&out), 2);
    assert!(!Path::new("unused.qhsa").exists());
    // as a check the same twistor is a verified failure
    assert_eq!(code_of(&["check", "ext", "--twistor", odd.to_str().unwrap()]), 1);
}

#[test]
fn drinfeld_emits_the_diagonal_twist_of_h2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fd.twist");
    let out = qhsa(&["drinfeld", "h2", "--verify", "--emit-twist", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let doc = parse_twist(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let h2 = fixtures::structure("h2").unwrap();
    let (f, inv) = doc.elements(&h2).unwrap();
    let coeffs: Vec<String> = [[0, 0], [0, 1], [1, 0], [1, 1]].iter().map(|w| f.coeff(w).to_string()).collect();
    assert_eq!(coeffs, ["1", "1", "1", "-1"]);
    assert_eq!(inv.unwrap(), f);
    assert!(doc.normalization.is_some());
    assert!(stdout(&out).contains("[drinfeld] pass"));
}

#[test]
fn drinfeld_of_ext_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fd.twist");
    let out = qhsa(&["drinfeld", "ext", "--verify", "--emit-twist", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = parse_twist(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ext = fixtures::structure("ext").unwrap();
    assert_eq!(doc.elements(&ext).unwrap().0, ext.unit(2));
}

#[test]
fn drinfeld_exit_codes() {
    assert_eq!(code_of(&["drinfeld", "trivial"]), 0);
    let out = qhsa(&["drinfeld", "h2-broken-antipode", "--verify"]);
    assert_eq!(code(&out), 1);
    assert!(!stdout(&out).contains("drinfeld-values"));
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let text = fixtures::structure_text("h2-broken-pentagon").unwrap();
    std::fs::write(dir.path().join("h2.qhsa"), text).unwrap();
    assert_eq!(code(&qhsa_in(Some(dir.path()), &["check", "h2"])), 1);
    assert_eq!(code(&qhsa_in(Some(dir.path()), &["check", "ext"])), 0);
    assert_eq!(code(&qhsa(&["check", "h2"])), 0);
}
