use std::process::Command;

use serde_json::Value;

fn lab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lab")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn trefoil_report() {
    let (code, out) = lab(&["--json", "invariants", "2: 1 1 1"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["schema"], 1);
    assert_eq!(r["polynomials"]["jones"]["text"], "t + t^3 - t^4");
    // quarter exponents
    assert_eq!(r["polynomials"]["jones"]["terms"][0], serde_json::json!([4, "1"]));
    assert_eq!(r["stats"]["prime_factors"], 1);
    assert_eq!(r["graph"]["reduced_seifert_b1"], 0);
    assert_eq!(r["fibered"]["holds"], true);
    assert_eq!(r["fibered"]["min_cf"], "1");
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["status"] != "fail"));
}

#[test]
fn corrected_leading_term_on_clasped_trefoil() {
    let (code, out) = lab(&["invariants", "2: -1 1 1 1 1"]);
    assert_eq!(code, 0);
    assert!(out.contains("[   pass] tht"), "{out}");
}

#[test]
fn suites_and_errors() {
    let (code, out) = lab(&["--json", "verify", "cc", "--seed", "7", "--trials", "10"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((r["passes"].as_u64(), r["failures"].as_array().map(Vec::len)), (Some(10), Some(0)));
    assert_eq!(lab(&["verify", "nonsense"]).0, 2);
    assert_eq!(lab(&["invariants", "X[1,2,1,2]"]).0, 2);
}

#[test]
fn generated_diagrams_round_trip() {
    let (code, pd) = lab(&["generate", "almost-positive", "--seed", "3", "--crossings", "7"]);
    assert_eq!(code, 0);
    let (code, out) = lab(&["--json", "invariants", pd.trim()]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["stats"]["crossings"], 7);
    assert_eq!(r["stats"]["negative_crossings"], 1);
}

#[test]
fn catalog_runs() {
    let (code, out) = lab(&["catalog", "--run"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}
