//! JSON encodings of library objects, and the plain-text rendering of
//! reports. Object keys are sorted (serde_json's default map), so output is
//! byte-for-byte reproducible.

use homlie_core::cohom::{increasing_tuples, Cochain, Representation};
use homlie_core::exactla::{Matrix, Subspace};
use homlie_core::extend::ExtensionData;
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::{Scalar, Q};
use serde_json::{json, Map, Value};

use crate::input::SCHEMA;

pub fn rational(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Q]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &Matrix<Q>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

pub fn matrices(ms: &[Matrix<Q>]) -> Value {
    Value::Array(ms.iter().map(matrix).collect())
}

pub fn basis(s: &Subspace<Q>) -> Value {
    Value::Array(s.basis().iter().map(|v| vector(v)).collect())
}

/// The algebra in the input file format (brackets with `i < j`).
pub fn algebra(g: &HomLieAlgebra<Q>) -> Value {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<Value> = g
                .basis_bracket(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != Q::int(0))
                .map(|(k, c)| json!([k, rational(c)]))
                .collect();
            if !terms.is_empty() {
                brackets.push(json!([i, j, terms]));
            }
        }
    }
    json!({
        "name": g.name(),
        "dim": n,
        "brackets": brackets,
        "twist": matrix(g.twist()),
    })
}

/// `{"[i,j,...]": value}` over increasing tuples; zero values are omitted.
pub fn cochain(c: &Cochain<Q>) -> Value {
    let mut out = Map::new();
    for t in increasing_tuples(c.g_dim(), c.degree()) {
        let v = c.value(&t);
        if v.iter().any(|x| *x != Q::int(0)) {
            let key = t.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            out.insert(format!("[{key}]"), vector(v));
        }
    }
    Value::Object(out)
}

/// An extension file for the datum, with `g` and `h` inlined.
pub fn extension_file(d: &ExtensionData<Q>) -> Value {
    json!({
        "schema": SCHEMA,
        "g": algebra(d.g()),
        "h": algebra(d.h()),
        "rho": matrices(d.rho()),
        "omega": cochain(d.omega()),
    })
}

pub fn representation(r: &Representation<Q>) -> Value {
    json!({
        "v_dim": r.v_dim(),
        "rho": matrices(r.rho()),
        "beta": matrix(r.beta()),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::Array(items) if items.iter().all(is_scalar) => {
            Some(format!("[{}]", items.iter().filter_map(inline).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::Array(r) if r.iter().all(is_scalar))) => {
            Some(format!("[{}]", items.iter().filter_map(inline).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(m) if m.is_empty() => Some("{}".into()),
        _ => None,
    }
}

/// Indented `key: value` text; vectors and matrices stay on one line.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(v).unwrap_or_default())),
    }
}
