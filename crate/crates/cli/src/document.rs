//! JSON document assembly.
//!
//! Documents are built as `serde_json::Value` with map keys held in sorted
//! order, so identical inputs serialize to identical bytes and a parse /
//! re-serialize round trip is byte-stable.
//!
//! Schema (`"schema": "macdonald-svt/1"`):
//! - tableaux are `{"r,c": [m, ...]}` maps over nonempty boxes;
//! - coefficients are `{"num": [[qexp, texp, coeff], ...], "den": [[a, b,
//!   mult], ...]}` with `coeff` a decimal string (arbitrary precision);
//! - x-monomials are exponent vectors.

use macdonald_svt::macdonald::TermRecord;
use macdonald_svt::qt::{FactoredRational, XPolynomial};
use macdonald_svt::tableaux::SetValuedTableau;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "macdonald-svt/1";

pub fn tableau_value(t: &SetValuedTableau) -> Value {
    let mut map = Map::new();
    for (b, entries) in t.nonempty_boxes() {
        map.insert(
            format!("{},{}", b.r, b.c),
            Value::Array(entries.iter().map(|&m| json!(m)).collect()),
        );
    }
    Value::Object(map)
}

pub fn rational_value(c: &FactoredRational) -> Value {
    let num: Vec<Value> = c
        .numerator()
        .terms()
        .map(|(&(i, j), coeff)| json!([i, j, coeff.to_string()]))
        .collect();
    let den: Vec<Value> = c
        .denominator()
        .iter()
        .map(|(f, &m)| json!([f.q_exp, f.t_exp, m]))
        .collect();
    json!({ "num": num, "den": den })
}

pub fn polynomial_value(p: &XPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "x": m.exponents(),
                "coefficient": rational_value(c),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn term_value(t: &TermRecord) -> Value {
    json!({
        "tableau": tableau_value(&t.tableau),
        "x": t.x.exponents(),
        "maj": t.maj,
        "cov": t.cov,
        "factors": t.factors.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "weight": rational_value(&t.coefficient),
    })
}

/// Shared metadata head of every document.
pub fn base_document(command: &str) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    map
}
