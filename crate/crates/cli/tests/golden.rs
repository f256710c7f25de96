//! Text and JSON renderings checked against files in `tests/golden`. Set
//! `BOTT_KIT_BLESS=1` to rewrite them.

mod common;

use std::path::PathBuf;

use common::{json_numbers, numeric_tokens, run};

const CASES: &[(&str, &[&str])] = &[
    ("bott_a1", &["bott", "--type", "A1", "--sigma", "", "--weight", "-2"]),
    ("bott_a2_allzero", &["bott", "--type", "A2", "--sigma", "", "--weight", "-1,0"]),
    ("bott_b3_levi", &["bott", "--type", "B3", "--sigma", "2,3", "--weight", "-4,1,0"]),
    ("bott_e8_large", &["bott", "--type", "E8", "--sigma", "", "--weight", "3,1,4,1,5,9,2,6"]),
    ("vanish_main_a2", &["vanish", "main", "--type", "A2", "--sigma", "2", "--weight", "-1,0", "--a", "1", "--b", "2"]),
    ("vanish_main_b2", &["vanish", "main", "--type", "B2", "--sigma", "2", "--weight", "-2,0", "--a", "1", "--b", "2"]),
    ("vanish_main_g2", &["vanish", "main", "--type", "G2", "--sigma", "1", "--weight", "0,-1", "--a", "2", "--b", "1"]),
    ("vanish_h1_a4_range", &["vanish", "h1", "--type", "A4", "--sigma", "1,3,4", "--dim", "4"]),
    ("vanish_h1_a4_none", &["vanish", "h1", "--type", "A4", "--sigma", "1,3,4", "--dim", "5"]),
    ("vanish_semisimple_a4", &["vanish", "semisimple", "--type", "A4", "--sigma", "1,3,4", "--weights", "0,-2,0,0"]),
    ("vanish_semisimple_mixed", &["vanish", "semisimple", "--type", "A4", "--sigma", "1,2", "--weights", "0,0,-2,0;0,0,0,-3;1,0,0,0"]),
    ("invariants_a4", &["invariants", "--type", "A4", "--sigma", "1,3,4"]),
    ("invariants_a3", &["invariants", "--type", "A3", "--sigma", "2,3"]),
    ("invariants_f4", &["invariants", "--type", "F4", "--sigma", "1,3,4"]),
    ("invariants_a1", &["invariants", "--type", "A1", "--sigma", ""]),
    ("roots_a2", &["roots", "--type", "A2"]),
    ("roots_g2", &["roots", "--type", "G2"]),
    ("roots_a1xa1", &["roots", "--type", "A1xA1"]),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check(path: PathBuf, actual: &str) -> Result<(), String> {
    if std::env::var_os("BOTT_KIT_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs:\n--- expected\n{expected}--- actual\n{actual}", path.display()))
    }
}

#[test]
fn renderings_match_golden_files() {
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let doc = run(args);
        for (ext, body) in [("txt", doc.to_text()), ("json", doc.to_json() + "\n")] {
            if let Err(e) = check(golden_dir().join(format!("{name}.{ext}")), &body) {
                failures.push(e);
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn text_carries_every_json_number() {
    for (name, args) in CASES {
        let doc = run(args);
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        let mut numbers = Vec::new();
        json_numbers(&value, &mut numbers);
        let text = doc.to_text();
        let tokens = numeric_tokens(&text);
        for n in numbers {
            assert!(tokens.contains(&n), "{name}: {n} missing from text output\n{text}");
        }
    }
}
