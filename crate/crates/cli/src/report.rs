// SPDX-License-Identifier: Apache-2.0

//! Report rendering.
//!
//! Text reports have one `key: value` line per leaf, keys joined with `.`
//! and sorted bytewise. Strings print raw, numbers and booleans as in JSON,
//! arrays as JSON arrays. JSON reports are pretty-printed with sorted keys.

use serde_json::{Map, Value};

pub fn render_text(report: &Map<String, Value>) -> String {
    let mut lines = Vec::new();
    flatten("", report, &mut lines);
    lines.sort();
    lines.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn flatten(prefix: &str, map: &Map<String, Value>, out: &mut Vec<(String, String)>) {
    for (key, value) in map {
        let key = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
        match value {
            Value::Object(inner) => flatten(&key, inner, out),
            Value::Null => {}
            Value::String(s) => out.push((key, s.clone())),
            other => out.push((key, other.to_string())),
        }
    }
}

pub fn render_json(report: &Map<String, Value>) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}
