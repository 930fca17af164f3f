use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const SWAP: &str = r#"{"product": [{"matrix": {"k": 1, "p": 2}}, {"matrix": {"k": 1, "p": 2}}],
  "automorphism": [[0, 1], [1, 0]]}"#;
const IDENTITY: &str = r#"{"product": [{"matrix": {"k": 1, "p": 2}}, {"matrix": {"k": 1, "p": 2}}]}"#;
const M2F2: &str = r#"{"matrix": {"k": 2, "p": 2}}"#;
const DUAL: &str = r#"{"field": {"p": 2}, "dim": 2, "basis": ["1", "t"], "unit": [1, 0],
  "mul": [[0, 0, [1, 0]], [0, 1, [0, 1]], [1, 0, [0, 1]]]}"#;
const NON_ASSOCIATIVE: &str = r#"{"field": {"p": 2}, "dim": 3, "basis": ["1", "a", "b"], "unit": [1, 0, 0],
  "mul": [[0, 0, [1, 0, 0]], [0, 1, [0, 1, 0]], [1, 0, [0, 1, 0]], [0, 2, [0, 0, 1]], [2, 0, [0, 0, 1]],
          [1, 1, [0, 0, 1]], [1, 2, [0, 1, 0]]]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn skewrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewrank"))
        .args(args)
        .output()
        .unwrap()
}

fn json_report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn claim<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no claim {name}"))
}

#[test]
fn rank_of_m2f2() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "m2.json", M2F2);
    let out = skewrank(&["rank", "--spec", &spec, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(claim(&r, "goldie_rank")["witness"]["rank"], 2);
    assert_eq!(claim(&r, "semiprime")["witness"]["semiprime"], true);
}

#[test]
fn rank_of_dual_numbers_reports_radical() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "dual.json", DUAL);
    let out = skewrank(&["rank", "--spec", &spec, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(claim(&r, "semiprime")["witness"]["radical_dim"], 1);
    assert_eq!(claim(&r, "right_uniform_dimension")["witness"]["udim"], 1);
}

#[test]
fn verify_swap_at_three() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let out = skewrank(&["verify", "--spec", &spec, "--precision", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json_report(&out);
    let claims = r["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["status"] != "fail"));
    assert_eq!(claim(&r, "rank/rank_equality")["witness"]["uniform_dimension_B_N"], 2);
    assert_eq!(claim(&r, "alpha_prime/power_series_alpha_prime")["status"], "certified");
    let names: Vec<&str> = claims.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "id.json", IDENTITY);
    let run = || {
        let mut r = json_report(&skewrank(&["verify", "--spec", &spec, "--precision", "3", "--format", "json"]));
        r["timing_ms"] = Value::Null;
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn identity_on_f2xf2_is_falsified_not_failed() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "id.json", IDENTITY);
    let out = skewrank(&["alpha-prime", "--spec", &spec, "--precision", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(claim(&r, "transfer/induced_zero_product")["status"], "pass");
    assert_eq!(
        claim(&r, "transfer/power_series_alpha_prime_falsified")["status"],
        "certified"
    );
}

#[test]
fn alpha_prime_of_a_proper_ideal() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "id.json", IDENTITY);
    let out = skewrank(&["alpha-prime", "--spec", &spec, "--ideal", "1,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json_report(&out);
    assert_eq!(claim(&r, "alpha_prime")["witness"]["alpha_prime"], true);

    let spec = write(&dir, "swap.json", SWAP);
    let out = skewrank(&["alpha-prime", "--spec", &spec, "--ideal", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_associative_spec_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "bad.json", NON_ASSOCIATIVE);
    let out = skewrank(&["validate", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not associative"), "{err}");
    assert!(err.contains("(e1 e1) e1"), "{err}");
}

#[test]
fn missing_and_malformed_inputs() {
    assert_eq!(skewrank(&["rank"]).status.code(), Some(2));
    assert_eq!(skewrank(&["rank", "--spec", "/nonexistent.json"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "junk.json", "{not json");
    assert_eq!(skewrank(&["validate", "--spec", &spec]).status.code(), Some(2));
    let spec = write(&dir, "dual.json", DUAL);
    assert_eq!(skewrank(&["induced", "--spec", &spec]).status.code(), Some(2));
}

#[test]
fn oversized_truncation_exits_three() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "m2.json", M2F2);
    let out = skewrank(&["verify", "--spec", &spec, "--precision", "100"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn induced_ideal_of_the_radical() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "dual.json", DUAL);
    let out = skewrank(&["induced", "--spec", &spec, "--ideal", "0,1", "--precision", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json_report(&out);
    assert_eq!(claim(&r, "induced/quotient_isomorphism")["status"], "pass");
    assert_eq!(claim(&r, "corollary/quotient_rank_equality")["status"], "pass");
}

#[test]
fn non_alpha_ideal_is_rejected() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let out = skewrank(&["induced", "--spec", &spec, "--ideal", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

fn invert(spec: &str, series: &str) -> Output {
    skewrank(&["invert", "--spec", spec, "--series", series])
}

#[test]
fn invert_round_trips() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let doc = r#"{"precision":4,"coeffs":[[1,1],[1,0],[0,1],[1,1]]}"#;
    let f = write(&dir, "f.json", doc);
    let out = invert(&spec, &f);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let g = write(&dir, "g.json", &String::from_utf8(out.stdout).unwrap());
    let back = invert(&spec, &g);
    assert_eq!(String::from_utf8(back.stdout).unwrap().trim(), doc);
}

#[test]
fn invert_laurent_round_trips() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let doc = r#"{"precision":3,"coeffs":[[1,1],[0,1],[1,0]],"valuation":-2}"#;
    let f = write(&dir, "f.json", doc);
    let out = invert(&spec, &f);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let inv: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(inv["valuation"], 2);
    let g = write(&dir, "g.json", &String::from_utf8(out.stdout).unwrap());
    assert_eq!(String::from_utf8(invert(&spec, &g).stdout).unwrap().trim(), doc);
}

#[test]
fn invert_rejects_non_unit() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let f = write(&dir, "f.json", r#"{"precision":2,"coeffs":[[1,0],[1,1]]}"#);
    assert_eq!(invert(&spec, &f).status.code(), Some(2));
}

#[test]
fn oracle_toggle_drops_concordance_claims() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let out = skewrank(&["verify", "--spec", &spec, "--precision", "2", "--oracle", "off", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert!(r["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| !c["name"].as_str().unwrap().ends_with("oracle_concordance")));
    assert!(!r["skipped"].as_array().unwrap().is_empty());
}

#[test]
fn enumeration_cap_from_environment() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "swap.json", SWAP);
    let out = Command::new(env!("CARGO_BIN_EXE_skewrank"))
        .args(["verify", "--spec", &spec, "--precision", "3", "--format", "json"])
        .env("SKEWRANK_MAX_ENUM", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert!(r["skipped"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn text_format_lists_claims() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "m2.json", M2F2);
    let out = skewrank(&["rank", "--spec", &spec]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("scenario: rank"));
    assert!(text.contains("[pass] goldie_rank"));
    assert!(Path::new(env!("CARGO_BIN_EXE_skewrank")).exists());
}
