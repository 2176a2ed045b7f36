use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superlie"))
}

fn sample(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("samples").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn heisenberg_is_capable() {
    let r = json(&["analyze", "--json", sample("h10.json").to_str().unwrap()]);
    assert_eq!(r["capable"], true);
    assert_eq!(r["multiplier"]["total_dims"], serde_json::json!({"even": 2, "odd": 0}));
    assert_eq!(r["classification"], "H(1,0)⊕A(0|0)");
}

#[test]
fn odd_heisenberg_is_not_capable() {
    let r = json(&["analyze", "--json", sample("h2_odd.json").to_str().unwrap()]);
    assert_eq!(r["capable"], false);
    assert_eq!(r["epicenter"]["dims"], serde_json::json!({"even": 0, "odd": 1}));
    assert_eq!(r["epicenter"]["basis"], serde_json::json!([[["z", "1"]]]));
}

#[test]
fn text_report_is_default_and_deterministic() {
    let path = sample("h2_odd.json");
    let a = run(&["analyze", path.to_str().unwrap()]);
    let b = run(&["analyze", "--text", path.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("capable      false"));
}

#[test]
fn catalog_generic_full_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = run(&["catalog", "generic-full", "2", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&["analyze", "--json", out.to_str().unwrap()]);
    assert_eq!(r["map"]["lie_dims"], serde_json::json!({"even": 6, "odd": 6}));
    assert_eq!(r["map"]["nondegenerate"], true);
}

#[test]
fn catalog_heisenberg_even_shape() {
    let doc = json(&["catalog", "heisenberg-even", "2", "1"]);
    let labels = doc["space"]["even"].as_array().unwrap().len() + doc["space"]["odd"].as_array().unwrap().len();
    assert_eq!(labels, 6);
    assert_eq!(doc["brackets"].as_array().unwrap().len(), 3);
}

#[test]
fn catalog_output_is_stable() {
    let a = run(&["catalog", "random", "2", "2", "1", "1", "--seed", "7", "--field", "7"]);
    let b = run(&["catalog", "random", "2", "2", "1", "1", "--seed", "7", "--field", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_algebra_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.json");
    assert_eq!(run(&["catalog", "abelian", "0", "0", "--out", out.to_str().unwrap()]).status.code(), Some(0));
    let o = run(&["validate", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\n");
}

#[test]
fn classify_prints_the_type() {
    let o = run(&["classify", sample("h2_odd.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), "H_2⊕A(0|0)\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    // Syntax error: 3, with a position.
    let p = write("bad.json", "{\n  \"field\": ");
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    // Missing file: 3.
    assert_eq!(run(&["validate", "/definitely/not/here.json"]).status.code(), Some(3));
    // Unknown label: 1.
    let p = write(
        "unknown.json",
        r#"{"field":{"type":"rational"},"kind":"lie","space":{"even":["x","y"]},
            "brackets":[{"left":"x","right":"y","value":[["q","1"]]}]}"#,
    );
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("\"q\""));
    // Not nilpotent of class ≤ 2: 1.
    let p = write(
        "jacobi.json",
        r#"{"field":{"type":"rational"},"kind":"lie","space":{"even":["a","b","c"]},
            "brackets":[{"left":"a","right":"b","value":[["c","1"]]},{"left":"b","right":"c","value":[["a","1"]]},
                        {"left":"c","right":"a","value":[["b","1"]]}]}"#,
    );
    assert_eq!(run(&["analyze", p.to_str().unwrap()]).status.code(), Some(1));
    // Bad field: 1.
    let p = write("p3.json", r#"{"field":{"type":"prime","p":3},"kind":"lie","space":{}}"#);
    assert_eq!(run(&["validate", p.to_str().unwrap()]).status.code(), Some(1));
    // Out-of-range battery bounds: 1.
    let o = run(&["verify-theorems", "--max-m", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at most 5"));
    // Usage errors: 3; help: 0.
    assert_eq!(run(&["catalog", "nonsense"]).status.code(), Some(3));
    assert_eq!(run(&["catalog", "heisenberg-even", "1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn small_battery_passes() {
    let o = run(&["verify-theorems", "--max-m", "1", "--max-n", "1", "--field", "5", "--sequential"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed\n"));
}

#[test]
fn largest_bounds_are_accepted() {
    let o = run(&["verify-theorems", "--max-m", "5", "--max-n", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let table: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(table.as_array().unwrap().len(), 11);
}
