//! Fixed float rendering for reproducible JSON output.

use serde::Serialize;
use serde_json::{Number, Value};

/// Renders `x` with exactly six significant digits: positional notation for
/// decimal exponents in `-4..=5`, scientific (`1.23457e7`) otherwise.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    let sci = format!("{x:.5e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-4..=5).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, x)
    } else {
        sci
    }
}

/// Rewrites every non-integer number in `v` through [`sig6`].
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            if x.is_finite() {
                Value::Number(sig6(x).parse::<Number>().expect("sig6 is valid JSON"))
            } else {
                Value::Null
            }
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

/// `value` as JSON with floats rounded.
pub fn to_rounded_value<T: Serialize>(value: &T) -> Value {
    round_floats(serde_json::to_value(value).expect("report types serialize"))
}
