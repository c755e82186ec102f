use std::fs;
use std::path::PathBuf;

mod common;

use common::MALFORMED;
use geolab::dsl::*;

fn scenes() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenes");
    let mut v: Vec<(String, String)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "geo"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    v.sort();
    v
}


fn load(text: &str) -> Result<Scene, DslError> {
    elaborate(&parse(text)?)
}

#[test]
fn corpus_round_trips() {
    let all = scenes();
    assert!(all.len() >= 10);
    for (name, text) in all {
        let a = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = print_scene(&a);
        let b = parse(&printed).unwrap();
        assert_eq!(a.without_positions(), b.without_positions(), "{name}");
        assert_eq!(print_scene(&b), printed, "{name}");
        load(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn malformed_inputs_are_positioned() {
    for (text, kind, line, col) in MALFORMED {
        let e = load(text).unwrap_err();
        assert_eq!((e.kind, e.pos.line, e.pos.col), (*kind, *line, *col), "{text:?}: {e}");
        assert!(e.to_string().starts_with(&format!("{line}:{col}: {}", kind.as_str())));
    }
}

#[test]
fn minimal_scene() {
    let s = load("chart M(x,y,z)\nform eta = d(z) - y*d(x)\ncheck contact(eta)").unwrap();
    assert_eq!((s.order.len(), s.checks.len()), (1, 1));
    let r = run_scene(&s, &RunOptions::default());
    assert_eq!(r.checks.len(), 1);
    assert_eq!((r.checks[0].name.as_str(), r.checks[0].verdict.as_str()), ("contact(eta)", "pass"));
    assert!(r.checks[0].witness.is_empty());
}

#[test]
fn repeated_wedge_binds_zero() {
    let s = load("chart M(x,y,z)\nform w = d(x) ^ d(x)").unwrap();
    let Some(Value::Form(w)) = s.get("w") else { panic!() };
    assert!(w.is_zero() && w.degree() == 2);
}

#[test]
fn failing_integrability_has_witness() {
    let text = "chart M(x,y,z)\nform w = d(x)^d(y)\nform eta = d(z)\nstructure graph_omega_eta L(w, eta)\ncheck integrability(L)";
    let r = check_text(text, &RunOptions::default()).unwrap();
    assert_eq!(r.checks[0].verdict, "fail");
    assert!(r.checks[0].witness.iter().any(|w| w.starts_with("pair (")));
}

#[test]
fn empty_check_list() {
    let r = check_text("chart M(x,y,z)", &RunOptions { seed: 5, samples: 2, timings: false }).unwrap();
    assert!(r.checks.is_empty());
    let json = r.to_json();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["meta"]["seed"], 5);
    assert_eq!(v["meta"]["samples"], 2);
    assert_eq!(v["checks"], serde_json::json!([]));
    assert!(json.find("\"meta\"").unwrap() < json.find("\"checks\"").unwrap());
}

#[test]
fn normality_witness_in_report() {
    let text = fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenes/almost_contact_skewed.geo")).unwrap();
    let r = check_text(&text, &RunOptions::default()).unwrap();
    let rec = r.checks.iter().find(|c| c.name == "normality(A)").unwrap();
    assert_eq!(rec.verdict, "fail");
    assert_eq!(rec.witness[0], "N(@x, @z) + deta(@x, @z) xi = (-1/(z + 1))*@x");
}

#[test]
fn checker_errors_become_records() {
    let r = check_text("chart M(x,y,z)\nform eta = d(z)\ncheck reeb(eta)\ncheck contact(eta)", &RunOptions::default()).unwrap();
    assert_eq!(r.checks[0].verdict, "error");
    assert_eq!(r.checks[1].verdict, "fail");
    assert_eq!(r.exit_code(false), 1);
}

#[test]
fn key_order_is_stable() {
    let r = check_text("chart M(x,y,z)\nform eta = d(z) - y*d(x)\ncheck contact(eta)", &RunOptions::default()).unwrap();
    let json = r.to_json();
    let keys = ["\"seed\"", "\"samples\"", "\"version\"", "\"name\"", "\"verdict\"", "\"witness\"", "\"certificate\"", "\"ms\""];
    let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    assert!(r.to_text().contains("contact(eta)"));
}

#[test]
fn runs_are_deterministic() {
    for (name, text) in scenes() {
        let opts = RunOptions { seed: 99, samples: 3, timings: false };
        let a = check_text(&text, &opts).unwrap().to_json();
        let b = check_text(&text, &opts).unwrap().to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn strictness() {
    let text = "chart M(x,y,z)\nform eta = (1 + x^2)*d(z) - y*d(x)\ncheck contact(eta)";
    let r = check_text(text, &RunOptions::default()).unwrap();
    assert_eq!(r.checks[0].verdict, "generic-pass");
    assert_eq!((r.exit_code(false), r.exit_code(true)), (0, 1));
}
