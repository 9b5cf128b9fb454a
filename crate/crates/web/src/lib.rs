//! Browser bindings. Every entry point takes and returns JSON text; failures
//! come back as `{"error":..,"message":..}` so the page never has to catch.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use schubert_core::composition::{compose, verify_product, CompositionSpec};
use schubert_core::grassmann::{class_product, delta, GrassmannianShape, SchubertProblem};
use schubert_core::partition::parse_partition_list;
use schubert_core::wreath::cycle_type_table;
use schubert_core::Error;

fn error_json(e: &Error) -> Value {
    json!({"error": e.name(), "message": e.to_string()})
}

fn finish(r: Result<Value, Error>) -> String {
    r.unwrap_or_else(|e| error_json(&e)).to_string()
}

/// Product of the classes in `factors` (bracket syntax) in H*(G(a,b)); when
/// the factors form a Schubert problem the number of solutions is included.
pub fn class_product_json(a: u32, b: u32, factors: &str) -> String {
    finish((|| {
        let g = GrassmannianShape::new(a, b)?;
        let factors = parse_partition_list(factors)?;
        let product = class_product(&factors, g)?;
        let solutions = SchubertProblem::new(g, factors)
            .ok()
            .map(|p| delta(&p).to_string());
        Ok(json!({"product": product, "delta": solutions, "point": g.point()}))
    })())
}

/// Composes a spec given as JSON and checks the product formula on it.
pub fn compose_json(spec: &str) -> String {
    let spec: CompositionSpec = match serde_json::from_str(spec) {
        Ok(s) => s,
        Err(e) => return json!({"error": "ParseError", "message": e.to_string()}).to_string(),
    };
    finish((|| {
        let composed = compose(&spec)?;
        let check = verify_product(&spec)?;
        Ok(json!({"composed": composed, "check": check}))
    })())
}

/// Cycle types of the wreath product of S_q by S_p.
pub fn wreath_table_json(p: u32, q: u32) -> String {
    finish(cycle_type_table(p, q).map(|t| {
        json!({"rows": t, "total": t.total().to_string(), "markdown": t.to_markdown()})
    }))
}

#[wasm_bindgen(js_name = classProduct)]
pub fn class_product_js(a: u32, b: u32, factors: &str) -> String {
    class_product_json(a, b, factors)
}

#[wasm_bindgen(js_name = composeSpec)]
pub fn compose_js(spec: &str) -> String {
    compose_json(spec)
}

#[wasm_bindgen(js_name = wreathTable)]
pub fn wreath_table_js(p: u32, q: u32) -> String {
    wreath_table_json(p, q)
}
