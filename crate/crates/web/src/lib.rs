//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The logic lives in plain functions
//! returning `Result<String, String>` so it can be tested off the browser.

use harmonic_radius::bounds::{self, lemma2_f, lemma2_minimize, parse_claims, ALL_CLAIMS};
use harmonic_radius::enumerate::{sweep, Family, FamilySpec, SweepOptions};
use harmonic_radius::format::{parse_edge_list, parse_graph6, to_graph6};
use harmonic_radius::Graph;
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest grid side the heatmap will compute.
pub const MAX_GRID: u64 = 200;

/// Per-family size limits that keep a sweep under a few seconds in a tab.
pub fn browser_cap(family: Family) -> usize {
    match family {
        Family::ConnectedGraphs => 6,
        Family::LabeledTrees => 8,
        Family::UnicyclicGraphs => 7,
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Edge lists contain a line break or a space; anything else is graph6.
pub fn parse_graph(input: &str) -> Result<Graph, String> {
    let text = input.trim();
    if text.is_empty() {
        return Err("enter a graph6 string or an edge list".into());
    }
    let parsed = if text.contains(['\n', ' ']) { parse_edge_list(text) } else { parse_graph6(text) };
    parsed.map_err(|e| e.to_string())
}

/// Index report plus every claim that applies to the graph.
pub fn analyze(input: &str) -> Result<String, String> {
    let g = parse_graph(input)?;
    let facts = bounds::graph_facts(&g).map_err(|e| e.to_string())?;
    let checks = ALL_CLAIMS
        .into_iter()
        .filter(|c| c.applies_to(&facts.class))
        .map(|c| bounds::evaluate(c, &facts, &g))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    to_json(&json!({
        "graph6": to_graph6(&g),
        "edges": g.edges().collect::<Vec<_>>(),
        "report": facts,
        "checks": checks,
    }))
}

/// `f(x, y)` as doubles on `[2, x_max] x [2, y_max]` (rows by `y`), with the
/// exact minimum.
pub fn lemma2_grid(x_max: u64, y_max: u64) -> Result<String, String> {
    if x_max > MAX_GRID || y_max > MAX_GRID {
        return Err(format!("grid sides are limited to {MAX_GRID}"));
    }
    let minimum = lemma2_minimize(x_max, y_max).map_err(|e| e.to_string())?;
    let rows = (2..=y_max)
        .map(|y| (2..=x_max).map(|x| lemma2_f(x, y).map(|v| v.to_f64())).collect::<Result<Vec<f64>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    to_json(&json!({
        "x_max": x_max,
        "y_max": y_max,
        "rows": rows,
        "argmin": minimum.argmin,
        "min_value": minimum.min_value,
        "monotone_tail": minimum.monotone_tail,
    }))
}

/// Exact `f(x, y)` as a `"p/q"` string.
pub fn lemma2_value(x: u64, y: u64) -> Result<String, String> {
    lemma2_f(x, y).map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Sweep of a small family; `claims` is a comma-separated list.
pub fn sweep_family(family: &str, n: usize, claims: &str) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: harmonic_radius::Error| e.to_string())?;
    if n > browser_cap(family) {
        return Err(format!("{} is limited to n <= {} in the browser", family.name(), browser_cap(family)));
    }
    let claims = parse_claims(claims).map_err(|e| e.to_string())?;
    let options = SweepOptions { jobs: 1, max_certificates: 20 };
    let report = sweep(&FamilySpec::new(family, n), &claims, &options).map_err(|e| e.to_string())?;
    to_json(&report)
}

#[wasm_bindgen(js_name = analyzeGraph)]
pub fn analyze_graph_js(input: &str) -> Result<String, JsValue> {
    analyze(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = lemma2Grid)]
pub fn lemma2_grid_js(x_max: u32, y_max: u32) -> Result<String, JsValue> {
    lemma2_grid(x_max.into(), y_max.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = lemma2Value)]
pub fn lemma2_value_js(x: u32, y: u32) -> Result<String, JsValue> {
    lemma2_value(x.into(), y.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = sweepFamily)]
pub fn sweep_family_js(family: &str, n: u32, claims: &str) -> Result<String, JsValue> {
    sweep_family(family, n as usize, claims).map_err(|e| JsValue::from_str(&e))
}
