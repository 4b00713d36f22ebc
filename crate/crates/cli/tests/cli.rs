//! End-to-end tests of the binary: output, exit-code contract, JSON shape.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compare_prints_order_symbol() {
    let o = run(&["compare", "C{2,3,5}", "C{6,20,15}"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("<", 0));
    let o = run(&["compare", "C{6,20}", "C{3,10}"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("=", 0));
    let o = run(&["compare", "C{2}", "C{3}"]);
    assert_eq!(stdout(&o).trim(), "||");
    let o = run(&["compare", "C{3}", "C{6}"]);
    assert_eq!(stdout(&o).trim(), ">");
}

#[test]
fn decompose_lists_prime_conditions() {
    let o = run(&["decompose", "S{30}"]);
    assert_eq!(stdout(&o).trim(), "S{2} S{3} S{5}");
    assert_eq!(code(&o), 0);
    let o = run(&["decompose", "S{6,20}"]);
    assert_eq!(stdout(&o).trim(), "S{2} S{3,5}");
}

#[test]
fn boolean_answers_drive_exit_codes() {
    let o = run(&["satisfies", "C{10}", "S{2,5}"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("true", 0));
    let o = run(&["satisfies", "C{5,6}", "S{2,5}"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("false", 1));
    let o = run(&["implies", "S{2}", "S{3}", ":", "S{6}"]);
    assert_eq!(code(&o), 0);
    let o = run(&["implies", "S{3}", ":", "S{6}"]);
    assert_eq!(code(&o), 1);
    let o = run(&["oracle", "satisfies", "C{3}", "S{3}"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("false", 1));
}

#[test]
fn errors_exit_2_and_report_on_stderr() {
    let o = run(&["satisfies", "C{}", "S{2}"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("position"));
    let o = run(&["satisfies", "S{2}", "C{2}"]); // kinds swapped
    assert_eq!(code(&o), 2);
    let o = run(&["implies", "S{2}", "S{6}"]); // missing ':'
    assert_eq!(code(&o), 2);
    // resource bound, not a semantic "no"
    let o = run(&["satisfies", "C{2,3}", "S{2,3,5}", "--max-maps", "3"]);
    assert_eq!(code(&o), 2);
    let o = run(&["oracle", "power", "C{2,3}", "C{4}", "--max-vertices", "100"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn json_outputs_are_schema_tagged_and_witnessed() {
    let o = run(&["satisfies", "C{5,6}", "S{2,5}", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["answer"], false);
    let map = v["witness"]["map"].as_array().unwrap();
    assert_eq!(map.len(), 2);
    assert!(map.iter().all(|e| e["cycle"].is_u64() && e["image"].is_u64()));

    let o = run(&["implies", "S{2}", ":", "S{6}", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["unimplied"], "S{3}");

    let o = run(&["compare", "C{6}", "C{3}", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["answer"], "<");
}

#[test]
fn canon_handles_both_kinds() {
    let o = run(&["canon", "C{6,20}"]);
    assert_eq!(stdout(&o).trim(), "C{3,10}");
    let o = run(&["canon", "C{9}"]);
    assert_eq!(stdout(&o).trim(), "C{3}");
    let o = run(&["canon", "S{6,20}"]);
    assert_eq!(stdout(&o).trim(), "S{6,10}");
    let o = run(&["canon", "S{1,7}"]);
    assert_eq!(stdout(&o).trim(), "S{1}");
}

#[test]
fn npc_and_lattice_operations() {
    let o = run(&["npc", "C{6,20}"]);
    assert_eq!(stdout(&o).trim(), "S{2,3} S{3,5}");
    let o = run(&["npc", "C{1}"]);
    assert_eq!(stdout(&o).trim(), "-");
    let o = run(&["meet", "--kind", "cond", "S{2}", "S{3}"]);
    assert_eq!(stdout(&o).trim(), "S{2,3}");
    let o = run(&["join", "--kind", "cond", "S{2}", "S{3}"]);
    assert_eq!(stdout(&o).trim(), "S{6}");
    let o = run(&["meet", "--kind", "uc", "C{2}", "C{3}"]);
    assert_eq!(stdout(&o).trim(), "C{6}");
    let o = run(&["join", "--kind", "uc", "C{2}", "C{3}"]);
    assert_eq!(stdout(&o).trim(), "C{1}");
}

#[test]
fn hasse_text_matches_the_two_prime_figure() {
    let o = run(&["hasse", "--primes", "2,3", "--kind", "uc", "--format", "text"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("nodes: 5"));
    assert_eq!(lines.next(), Some("covers: 5"));
    assert!(out.contains("C{2,3} < C{6}"));
    assert!(out.contains("C{6} < C{2}"));
    assert!(out.contains("C{2} < C{1}"));
}

#[test]
fn hasse_dot_is_well_formed() {
    let o = run(&["hasse", "--primes", "2,3,5", "--kind", "uc", "--format", "dot"]);
    let out = stdout(&o);
    assert!(out.starts_with("digraph hasse {"));
    assert!(out.trim_end().ends_with('}'));
    let node_lines = out
        .lines()
        .filter(|l| l.ends_with("\";") && !l.contains("->"))
        .count();
    let edge_lines = out.lines().filter(|l| l.contains("->")).count();
    assert_eq!((node_lines, edge_lines), (19, 31));
}

#[test]
fn hasse_condition_labels_are_decompositions() {
    let o = run(&["hasse", "--primes", "2,3", "--kind", "cond", "--format", "text"]);
    let out = stdout(&o);
    assert!(out.contains("S{2}+S{3}"));
    assert!(out.contains("S{1}"));
    // the trivial class is the bottom: it covers nothing
    assert!(!out.lines().any(|l| l.contains("< S{1}")));
}

#[test]
fn oracle_constructions_report_shapes() {
    let o = run(&["oracle", "power", "C{2,3}", "C{2}"]);
    let out = stdout(&o);
    assert!(out.contains("vertices: 25"));
    assert!(out.contains("cycles: 2,2,3,3,3,6,6"));
    let o = run(&["oracle", "quotient", "C{3}", "C{3}"]);
    let out = stdout(&o);
    assert!(out.contains("base: 27"));
    let o = run(&["oracle", "free", "C{2}", "C{2}"]);
    assert!(stdout(&o).contains("cycles: 2,2"));
}
