//! Deterministic number formatting for all emitted files.
//!
//! Every float leaving the program is rounded to 12 significant digits
//! first, which soaks up last-ulp noise from floating-point evaluation order
//! and keeps JSON, CSV, and SVG output byte-identical across runs and
//! platforms.

use serde_json::Value;

/// Rounds to 12 significant decimal digits. Zero loses its sign so that
/// -0.0 never leaks into output.
pub fn round_sig12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { 0.0 } else { v };
    }
    format!("{v:.11e}").parse().expect("12-digit scientific notation parses back")
}

/// Shortest decimal form of the rounded value ("0.9", "14400", "-0.3").
pub fn fmt_f64(v: f64) -> String {
    let r = round_sig12(v);
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

/// Walks a JSON tree rounding every float in place. Integers pass through
/// untouched, so counts stay integers.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                let f = n.as_f64().expect("checked is_f64");
                *v = match serde_json::Number::from_f64(round_sig12(f)) {
                    Some(num) => Value::Number(num),
                    None => Value::Null,
                };
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

/// Serializes with struct-declaration key order and rounded floats.
pub fn to_rounded_json<T: serde::Serialize>(value: &T) -> Value {
    let mut v = serde_json::to_value(value).expect("value serializes to JSON");
    round_json(&mut v);
    v
}

/// Pretty JSON with a trailing newline, ready for stdout or a file.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value prints");
    s.push('\n');
    s
}
