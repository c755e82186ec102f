//! Browser bindings: run scene text, probe a contact form, test normality.

use geolab::dsl::{check_text, DslError, RunOptions};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn report(text: &str, seed: u64, samples: usize) -> String {
    let opts = RunOptions { seed, samples, ..RunOptions::default() };
    match check_text(text, &opts) {
        Ok(r) => r.to_json(),
        Err(e) => error_json(text, &e),
    }
}

fn error_json(text: &str, e: &DslError) -> String {
    json!({
        "error": {
            "kind": e.kind.as_str(),
            "line": e.pos.line,
            "col": e.pos.col,
            "message": e.to_string(),
        },
        "scene": text,
    })
    .to_string()
}

/// Runs every check in a scene and returns the JSON report.
#[wasm_bindgen]
pub fn check_scene(text: &str, seed: u32, samples: u32) -> String {
    report(text, seed as u64, samples.max(1) as usize)
}

/// Contact, Reeb and Dirac-graph checks for a 1-form on R^3 with coordinates x, y, z.
#[wasm_bindgen]
pub fn contact_form(eta: &str) -> String {
    report(&contact_scene(eta), geolab::dsl::DEFAULT_SEED, geolab::dsl::DEFAULT_SAMPLES)
}

/// Normality and integrability of phi with phi(@z) = 0, xi and eta on R^3.
#[wasm_bindgen]
pub fn almost_contact(phi_x: &str, phi_y: &str, xi: &str, eta: &str) -> String {
    report(&normality_scene(phi_x, phi_y, xi, eta), geolab::dsl::DEFAULT_SEED, geolab::dsl::DEFAULT_SAMPLES)
}

fn contact_scene(eta: &str) -> String {
    format!(
        "chart R3(x, y, z)\nform eta = {eta}\ncheck contact(eta)\ncheck reeb(eta)\ncheck correspondence(eta)\n\
         structure graph_eta L(eta)\ncheck integrability(L)\ncheck transversality(L)\ncheck kernel_line(L)\n"
    )
}

fn normality_scene(phi_x: &str, phi_y: &str, xi: &str, eta: &str) -> String {
    format!(
        "chart R3(x, y, z)\ntensor11 phi {{ x -> {phi_x}; y -> {phi_y}; }}\nvector xi = {xi}\nform eta = {eta}\n\
         structure almost_contact A(phi, xi, eta)\ncheck almost_contact(A)\ncheck normality(A)\n\
         structure bundle_almost_contact E(A)\ncheck integrability(E)\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdicts(s: &str) -> Vec<String> {
        let v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["checks"].as_array().unwrap().iter().map(|c| c["verdict"].as_str().unwrap().to_string()).collect()
    }

    #[test]
    fn standard_contact_form_passes() {
        let out = contact_form("d(z) - y*d(x)");
        assert!(verdicts(&out).iter().all(|v| v == "pass"), "{out}");
    }

    #[test]
    fn closed_form_is_not_contact() {
        assert_eq!(verdicts(&contact_form("d(z)"))[0], "fail");
    }

    #[test]
    fn skewed_structure_is_not_normal() {
        let flat = verdicts(&almost_contact("@y", "-@x", "@z", "d(z)"));
        assert!(flat.iter().all(|v| v == "pass"));
        let skewed = verdicts(&almost_contact("(1 + z)*@y", "-@x/(1 + z)", "@z", "d(z)"));
        assert_eq!(skewed, ["pass", "fail", "fail"]);
    }

    #[test]
    fn parse_errors_are_positioned() {
        let v: serde_json::Value = serde_json::from_str(&check_scene("chart M(x,y,z)\ncheck contact(zeta)", 1, 3)).unwrap();
        assert_eq!((v["error"]["line"].as_u64(), v["error"]["col"].as_u64()), (Some(2), Some(15)));
    }
}
