//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON document; errors come back as a JS string.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use braidknot::braid::{random_markov_orbit, BraidWord};
use braidknot::invariants::{
    alexander_polynomial, check_wada_conjecture, invariant_chain, twovar_invariant, wada_polynomial,
};
use braidknot::representations::{braid_matrix, RepresentationKind};

fn parse(braid: &str, strands: Option<u32>) -> Result<BraidWord, String> {
    BraidWord::parse(braid, strands.map(|n| n as usize)).map_err(|e| e.to_string())
}

fn chain_strings(kind: RepresentationKind, beta: &BraidWord) -> Vec<String> {
    invariant_chain(kind, beta)
        .expect("univariate kind")
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect()
}

pub fn matrix_report(braid: &str, strands: Option<u32>, kind: &str) -> Result<String, String> {
    let beta = parse(braid, strands)?;
    let kind: RepresentationKind = kind.parse()?;
    let m = braid_matrix(kind, &beta);
    Ok(json!({
        "braid": beta.to_string(),
        "strands": beta.strands(),
        "kind": kind.name(),
        "matrix": m.to_string_rows(),
        "matrix_minus_identity": m.sub_identity().to_string_rows(),
    })
    .to_string())
}

pub fn invariants_report(braid: &str, strands: Option<u32>) -> Result<String, String> {
    let beta = parse(braid, strands)?;
    let conjecture = check_wada_conjecture(&beta);
    let twovar = twovar_invariant(&beta);
    Ok(json!({
        "braid": beta.to_string(),
        "strands": beta.strands(),
        "wada": conjecture.wada.to_string(),
        "wada_chain": chain_strings(RepresentationKind::Wada, &beta),
        "alexander": conjecture.alexander.to_string(),
        "alexander_chain": chain_strings(RepresentationKind::Burau, &beta),
        "alexander_at_minus1": conjecture.alexander_at_minus_1.to_string(),
        "conjecture": conjecture.status.to_string(),
        "twovar": twovar.gcd.to_string(),
        "twovar_principal_hint": twovar.principal_hint,
    })
    .to_string())
}

pub fn orbit_report(
    braid: &str,
    strands: Option<u32>,
    depth: u32,
    seed: u32,
    max_strands: u32,
) -> Result<String, String> {
    let beta = parse(braid, strands)?;
    let cap = (max_strands as usize).max(beta.strands());
    let orbit = random_markov_orbit(&beta, depth as usize, cap, seed as u64);
    let node = |mv: Option<String>, b: &BraidWord| -> Value {
        json!({
            "move": mv,
            "braid": b.to_string(),
            "strands": b.strands(),
            "wada": wada_polynomial(b).to_string(),
            "alexander": alexander_polynomial(b).to_string(),
        })
    };
    let mut nodes = vec![node(None, &orbit.start)];
    nodes.extend(
        orbit
            .steps
            .iter()
            .map(|(mv, b)| node(Some(mv.to_string()), b)),
    );
    let constant = nodes
        .windows(2)
        .all(|w| w[0]["wada"] == w[1]["wada"] && w[0]["alexander"] == w[1]["alexander"]);
    Ok(json!({ "nodes": nodes, "constant": constant }).to_string())
}

/// Representation matrix of the braid and J - I.
#[wasm_bindgen(js_name = braidMatrix)]
pub fn braid_matrix_js(braid: &str, strands: Option<u32>, kind: &str) -> Result<String, JsValue> {
    matrix_report(braid, strands, kind).map_err(JsValue::from)
}

/// Wada, Alexander and two-variable invariants of the closure.
#[wasm_bindgen(js_name = invariants)]
pub fn invariants_js(braid: &str, strands: Option<u32>) -> Result<String, JsValue> {
    invariants_report(braid, strands).map_err(JsValue::from)
}

/// A random Markov orbit with the invariants at every node.
#[wasm_bindgen(js_name = markovOrbit)]
pub fn markov_orbit_js(
    braid: &str,
    strands: Option<u32>,
    depth: u32,
    seed: u32,
    max_strands: u32,
) -> Result<String, JsValue> {
    orbit_report(braid, strands, depth, seed, max_strands).map_err(JsValue::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_json(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn matrix_of_trefoil() {
        let v = parse_json(&matrix_report("1^3", None, "wada").unwrap());
        assert_eq!(
            v["matrix_minus_identity"],
            json!([["3*t", "3*t^2"], ["-3", "-3*t"]])
        );
    }

    #[test]
    fn invariants_of_figure_eight() {
        let v = parse_json(&invariants_report("1 -2 1 -2", None).unwrap());
        assert_eq!(v["wada"], "5");
        assert_eq!(v["alexander"], "t^2 - 3*t + 1");
        assert_eq!(v["conjecture"], "consistent");
    }

    #[test]
    fn orbit_is_constant() {
        let v = parse_json(&orbit_report("1^3", None, 5, 11, 4).unwrap());
        assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
        assert_eq!(v["constant"], true);
    }

    #[test]
    fn errors_are_messages() {
        assert!(matrix_report("1 q", None, "burau")
            .unwrap_err()
            .contains("'q'"));
        assert!(matrix_report("1", None, "lawrence").is_err());
    }
}
