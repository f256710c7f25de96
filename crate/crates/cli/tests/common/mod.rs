#![allow(dead_code)]

use bott_kit_cli::{execute, Cli, Document};
use clap::Parser;

pub fn run(args: &[&str]) -> Document {
    let cli = Cli::try_parse_from(std::iter::once("bott-kit").chain(args.iter().copied())).expect("arguments parse");
    execute(&cli.command).unwrap_or_else(|e| panic!("{args:?}: {}", e.message()))
}

pub fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&run(args).to_json()).unwrap()
}

/// Signed integers and fractions appearing in `s`.
pub fn numeric_tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let neg = b[i] == b'-' && i + 1 < b.len() && b[i + 1].is_ascii_digit();
        if b[i].is_ascii_digit() || neg {
            let start = i;
            i += 1;
            while i < b.len() && (b[i].is_ascii_digit() || (b[i] == b'/' && i + 1 < b.len() && b[i + 1].is_ascii_digit())) {
                i += 1;
            }
            out.push(s[start..i].to_string());
        } else {
            i += 1;
        }
    }
    out
}

/// Every number in the JSON value, and every string that is itself a
/// number, rendered as text.
pub fn json_numbers(v: &serde_json::Value, out: &mut Vec<String>) {
    match v {
        serde_json::Value::Number(n) => out.push(n.to_string()),
        serde_json::Value::String(s) => {
            if numeric_tokens(s) == [s.clone()] {
                out.push(s.clone());
            }
        }
        serde_json::Value::Array(a) => a.iter().for_each(|x| json_numbers(x, out)),
        serde_json::Value::Object(m) => m.values().for_each(|x| json_numbers(x, out)),
        _ => {}
    }
}
