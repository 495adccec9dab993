use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_expander-lp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or_default()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn generate(spec: &str) -> Vec<u8> {
    let out = run(&["generate", spec], None);
    assert!(out.status.success());
    out.stdout
}

#[test]
fn analyze_petersen_and_k4() {
    let r = json(&run(&["analyze", "-", "--format", "json"], Some(&generate("petersen"))));
    assert_eq!(r["girth_bfs"], 5);
    assert_eq!(r["girth_traces"], 5);
    assert!((r["spectral_gap"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(r["edge_expansion"]["h"], "1");
    let r = json(&run(&["analyze", "-", "--format", "json"], Some(&generate("complete:4"))));
    assert_eq!(r["girth_bfs"], 3);
    assert!((r["spectral_gap"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn analyze_reports_parse_offset() {
    let out = run(&["analyze", "-"], Some(b"I?LRCe"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 6"));
}

#[test]
fn oversized_graph_exits_with_size_code() {
    // 600 vertices, no edges: over the eigensolver cap.
    let mut g6 = vec![126u8, 63, 72, 87];
    g6.extend(std::iter::repeat_n(63u8, (600 * 599 / 2usize).div_ceil(6)));
    let out = run(&["certify", "-"], Some(&g6));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bound_examples() {
    let r = json(&run(&["bound", "--k", "3", "--eigenvalues", "1,-2", "--format", "json"], None));
    assert_eq!(r["certificate"]["bound_exact"], "10");
    assert_eq!(r["lp_dual"]["objective_exact"], "10");
    let r = json(&run(&["bound", "--k", "7", "--eigenvalues", "2,-3", "--format", "json"], None));
    assert_eq!(r["certificate"]["bound_exact"], "50");
    let r = json(&run(
        &["bound", "--k", "3", "--eigenvalues", "sqrt(2),-sqrt(2),-3", "--format", "json"],
        None,
    ));
    assert!((r["lp_bound"].as_f64().unwrap() - 14.0).abs() < 1e-6);
}

#[test]
fn bound_without_certificate() {
    let r = json(&run(&["bound", "--k", "3", "--eigenvalues", "2.9", "--format", "json"], None));
    assert_eq!(r["lp_bound"], "infinity");
    assert_eq!(r["certificate"]["conditions"]["f0_positive"]["holds"], false);
    let out = run(&["bound", "--k", "3", "--eigenvalues", "2.9", "--method", "certificate"], None);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["bound", "--k", "3", "--eigenvalues", "1,x"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_verdicts() {
    let r = json(&run(&["certify", "-"], Some(&generate("petersen"))));
    assert_eq!(r["verdict"], "certified");
    assert_eq!(r["schema"], 1);
    assert_eq!(r["is_moore"], true);
    let r = json(&run(&["certify", "-"], Some(&generate("cycle:7"))));
    assert_eq!(r["verdict"], "certified");
    assert_eq!(r["d"], 3);
    // A cubic graph on 10 vertices other than Petersen: the pentagonal prism.
    let prism = pentagonal_prism();
    let r = json(&run(&["certify", "-"], Some(&prism)));
    assert_ne!(r["verdict"], "certified");
    assert!(!r["reason"].as_str().unwrap().is_empty());
}

fn pentagonal_prism() -> Vec<u8> {
    // graph6 of C5 x K2, vertices 0-4 outer and 5-9 inner.
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 1) % 5));
        edges.push((i, i + 5));
    }
    let mut bits = Vec::new();
    for j in 1..10 {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
        }
    }
    let mut out = vec![63 + 10];
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (n, &bit) in chunk.iter().enumerate() {
            b |= u8::from(bit) << (5 - n);
        }
        out.push(63 + b);
    }
    out
}

#[test]
fn generate_known_codes() {
    assert_eq!(generate("cycle:5"), b"Dhc\n");
    assert_eq!(generate("pg2:2").len(), 1 + 16 + 1);
    let out = run(&["generate", "gq:2"], None);
    assert_eq!(out.stdout[0], 63 + 30);
    assert_eq!(run(&["generate", "pg2:6"], None).status.code(), Some(2));
}

#[test]
fn table2_is_tight_and_deterministic() {
    let a = run(&["table2", "--json"], None);
    let b = run(&["table2", "--json"], None);
    assert_eq!(a.stdout, b.stdout);
    let rows = json(&a);
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 10);
    assert!(rows.iter().all(|r| r["tight"] == true), "{rows:?}");
    let text = String::from_utf8(run(&["table2"], None).stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.contains(" yes ")));
}

#[test]
fn conflicting_arguments_are_usage_errors() {
    assert_eq!(run(&["bound", "--k", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["generate"], None).status.code(), Some(2));
    assert_eq!(run(&["table2", "--format", "xml"], None).status.code(), Some(2));
}
