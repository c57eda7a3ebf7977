use std::process::Command;

use loopreps::cli;
use loopreps::report::{ClassifyReport, FormsReport, LevelsReport, OrbitsReport};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["loopreps"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn squash(s: &str) -> Vec<String> {
    s.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect()
}

#[test]
fn su2_odd_level_is_empty_success() {
    let (code, out, _) = run(&["classify", "--group", "A1", "--subgroup", "k2", "--level", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"], Value::Array(vec![]));
}

#[test]
fn e6_levels_row() {
    let (code, out, _) = run(&["levels", "--group", "E6", "--subgroup", "full"]);
    assert_eq!(code, 0);
    assert!(squash(&out).contains(&"E6 ℤ_3 — 1 3".to_string()), "{out}");
}

#[test]
fn act_on_vacuum() {
    let (code, out, _) = run(&[
        "act", "--group", "A2", "--subgroup", "full", "--level", "1", "--weight", "0,0", "--element", "1",
    ]);
    assert_eq!((code, out.trim()), (0, "1,0"));
}

#[test]
fn table_columns_align_by_characters() {
    let (_, out, _) = run(&["levels", "--group", "Spin8"]);
    let lines: Vec<&str> = out.lines().collect();
    let col = |l: &str| l.char_indices().position(|(i, _)| l[i..].starts_with("SO_") || l[i..].starts_with("PSO_") || l[i..].starts_with("G/Z") || l[i..].starts_with('—'));
    let cols: Vec<_> = lines.iter().map(|l| col(l)).collect();
    assert!(cols.iter().all(|c| c.is_some() && *c == cols[0]), "{out}");
}

#[test]
fn unknown_group_lists_grammar() {
    let (code, _, err) = run(&["classify", "--group", "Q7"]);
    assert_eq!(code, 2);
    assert!(err.contains("SU<n>"), "{err}");
    let (code, _, err) = run(&["orbits", "--group", "D4", "--subgroup", "k3"]);
    assert_eq!(code, 2);
    assert!(err.contains("triv, v, s, c, full"), "{err}");
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(run(&["classify"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, _, err) = run(&["act", "--group", "A2", "--level", "1", "--weight", "1,1", "--element", "1"]);
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = run(&["act", "--group", "A2", "--level", "1", "--weight", "1", "--element", "1"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["act", "--group", "D4", "--subgroup", "v", "--level", "1", "--weight", "0,0,0,0", "--element", "3"]);
    assert_eq!(code, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: [&[&str]; 5] = [
        &["levels", "--max-rank", "4", "--format", "json"],
        &["orbits", "--group", "Spin8", "--level", "2", "--format", "json"],
        &["forms", "--group", "Spin8", "--level", "2", "--format", "json"],
        &["classify", "--group", "SU3", "--level", "3", "--format", "json"],
        &["classify-quotient", "--group", "Spin10", "--level", "4", "--format", "json"],
    ];
    for args in cases {
        let (code, out, _) = run(args);
        assert_eq!(code, 0);
        let again = match args[0] {
            "levels" => serde_json::to_string_pretty(&serde_json::from_str::<LevelsReport>(&out).unwrap()),
            "orbits" => serde_json::to_string_pretty(&serde_json::from_str::<OrbitsReport>(&out).unwrap()),
            "forms" => serde_json::to_string_pretty(&serde_json::from_str::<FormsReport>(&out).unwrap()),
            _ => serde_json::to_string_pretty(&serde_json::from_str::<ClassifyReport>(&out).unwrap()),
        }
        .unwrap();
        assert_eq!(again + "\n", out, "{args:?}");
        assert_eq!(run(args).1, out, "{args:?} not deterministic");
    }
}

#[test]
fn spin8_classification_json() {
    let (_, out, _) = run(&["classify", "--group", "Spin8", "--level", "2", "--format", "json"]);
    let r: ClassifyReport = serde_json::from_str(&out).unwrap();
    assert_eq!((r.fundamental_level, r.basic_level, r.classes.len()), (1, 2, 10));
    let doubled: Vec<_> = r.classes.iter().filter(|c| c.multiplicity == 2).collect();
    assert_eq!(doubled.len(), 1);
    assert_eq!(doubled[0].orbit, vec![vec![0, 1, 0, 0]]);
    assert_eq!(doubled[0].omega, "omega1");
    assert_eq!(doubled[0].characters, vec!["0,0,0,0".to_string()]);
}

#[test]
fn diagram_and_alcove_verbs() {
    let (code, out, _) = run(&["diagram", "--group", "E6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
    let (_, out, _) = run(&["alcove", "--group", "G2", "--level", "2"]);
    assert_eq!(out.lines().count(), 1 + 4);
}

#[test]
fn golden_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let (code, _, err) = run(&["golden", "--max-rank", "3", "--max-level", "2", "--out-dir", d.path().to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
    }
    for f in ["levels.json", "counts.json", "orbits.json"] {
        let x = std::fs::read(a.path().join(f)).unwrap();
        let y = std::fs::read(b.path().join(f)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{f}");
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_loopreps");
    let ok = Command::new(bin).args(["levels", "--group", "SU2"]).output().unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin).args(["levels", "--group", "Z9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}

#[test]
fn golden_matches_frozen_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = run(&["golden", "--max-rank", "4", "--max-level", "2", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let frozen = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/golden");
    for f in ["levels.json", "counts.json", "orbits.json"] {
        let fresh = std::fs::read_to_string(dir.path().join(f)).unwrap();
        let old = std::fs::read_to_string(frozen.join(f)).unwrap();
        assert!(fresh == old, "{f} differs from the frozen copy");
    }
}
