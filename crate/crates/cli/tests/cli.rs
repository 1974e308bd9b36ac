use std::io::Write;
use std::process::{Command, Output, Stdio};

use emn::embedding::parse_rot;
use emn::graph::{parse_graph6, write_graph6};
use emn::matching::perfect_matchings;
use emn::{Edge, Graph};
use serde_json::Value;

fn emn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emn")).args(args).output().unwrap()
}

fn emn_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_emn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn fixture(name: &str) -> String {
    format!("{}/../core/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn k4_has_a_perfect_matching() {
    let o = emn(&["emn-check", "--g6", "C~", "--m", "0", "--n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"outcome\":\"Holds\"}\n");
}

#[test]
fn failing_check_reports_witness_and_exit_1() {
    let c6 = write_graph6(&Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap());
    let o = emn(&["extendable", "--g6", &c6, "--m", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let v = &json_lines(&o)[0];
    assert_eq!(v["outcome"], "Fails");
    assert_eq!(v["witness"]["m"], serde_json::json!([[0, 1], [3, 4]]));
    assert_eq!(v["witness"]["n"], serde_json::json!([]));
}

#[test]
fn surface_arithmetic() {
    let o = emn(&["mu", "--orientable", "--genus", "1"]);
    assert_eq!(json_lines(&o)[0]["mu"], 4);
    let o = emn(&["mu", "--non-orientable", "--genus", "3", "--format", "table"]);
    assert_eq!(stdout(&o), "4\n");
    let o = emn(&["threshold", "--orientable", "--genus", "2", "--k", "4"]);
    assert_eq!(json_lines(&o)[0]["threshold"], 9);
    let o = emn(&["claim3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 300);
    let o = emn(&["claim3", "--surface", "N3"]);
    assert_eq!(json_lines(&o)[0]["c"], "22/5");
    assert_eq!(json_lines(&o)[0]["floor_c"], 4);
}

#[test]
fn genus_of_k5_with_witness() {
    let k5 = stdout(&emn(&["gen", "--family", "complete:5", "--format", "table"]));
    let o = emn(&["genus", "--g6", k5.trim(), "--kind", "orientable"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["genus"], 1);
    let map = parse_rot(v["witness"].as_str().unwrap()).unwrap();
    assert_eq!(map.graph().edge_count(), 10);
}

#[test]
fn budget_errors_exit_3() {
    let k8 = stdout(&emn(&["gen", "--family", "complete:8", "--format", "table"]));
    let o = emn(&["genus", "--g6", k8.trim(), "--max-rotations", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn usage_errors_exit_2_on_stderr() {
    for args in [
        vec!["no-such-command"],
        vec!["emn-check", "--g6", "C~", "--m", "0", "--n", "0", "--bogus"],
        vec!["emn-check", "--m", "1", "--n", "0"],
        vec!["mu", "--genus", "1"],
        vec!["mu", "--non-orientable", "--genus", "0"],
        vec!["emn-check", "--g6", "C~~", "--m", "0", "--n", "0"],
    ] {
        let o = emn(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn enumerate_pipes_into_checks() {
    let o = emn(&["enumerate", "--n", "5", "--format", "table"]);
    let listing = stdout(&o);
    assert_eq!(listing.lines().count(), 21);
    let o = emn_stdin(&["emn-check", "--in", "-", "--m", "0", "--n", "0"], &listing);
    let verdicts = json_lines(&o);
    assert_eq!(verdicts.len(), 21);
    assert!(verdicts.iter().all(|v| v["reason"] == "odd vertex count"));
}

/// Checks a `pm` answer against the definition.
fn validate_pm(g: &Graph, forced: &[Edge], forbidden: &[Edge], answer: &Value) {
    if answer["status"] == "absent" {
        let any = perfect_matchings(g)
            .iter()
            .any(|f| forced.iter().all(|&e| f.contains(e)) && forbidden.iter().all(|&e| !f.contains(e)));
        assert!(!any, "absent but a completion exists");
        return;
    }
    let edges: Vec<Edge> = answer["matching"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| Edge::new(p[0].as_u64().unwrap() as usize, p[1].as_u64().unwrap() as usize).unwrap())
        .collect();
    let mut covered = 0u64;
    for e in &edges {
        assert!(g.contains_edge(*e));
        assert_eq!(covered & e.mask(), 0);
        covered |= e.mask();
    }
    assert_eq!(covered, g.vertex_mask());
    assert!(forced.iter().all(|e| edges.contains(e)));
    assert!(forbidden.iter().all(|e| !edges.contains(e)));
}

#[test]
fn pm_answers_are_valid() {
    let cases: [(&str, &str, &str); 5] = [
        ("C~", "0-1", "2-3"),
        ("C~", "", ""),
        ("E{Sw", "0-1", "3-4"),
        ("IheA@GUAo", "0-1", "2-3,5-7"),
        ("IheA@GUAo", "0-5", "1-2,3-4"),
    ];
    let parse = |s: &str| -> Vec<Edge> {
        s.split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                let (a, b) = p.split_once('-').unwrap();
                Edge::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
            })
            .collect()
    };
    for (g6, forced, forbidden) in cases {
        let g = parse_graph6(g6).unwrap();
        let o = emn(&["pm", "--g6", g6, "--forced", forced, "--forbidden", forbidden]);
        let answer = &json_lines(&o)[0];
        let expected_code = if answer["status"] == "absent" { 1 } else { 0 };
        assert_eq!(o.status.code(), Some(expected_code));
        validate_pm(&g, &parse(forced), &parse(forbidden), answer);
    }
}

#[test]
fn faces_of_a_fixture() {
    let o = emn(&["faces", "--rot", &fixture("q3_planar.rot")]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["report"]["chi"], 2);
    assert_eq!(v["faces"].as_array().unwrap().len(), 6);
    assert_eq!(v["report"]["phi"][0], "1/4");
    assert_eq!(v["triangular_corners"][0], serde_json::json!([0, 3]));
}

#[test]
fn verification_suites() {
    let o = emn(&["verify-lemmas", "--max-vertices", "6", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = &json_lines(&o)[0];
    assert_eq!(report["corpus_size"], 1 + 1 + 2 + 6 + 21 + 112);
    assert!(report["violations"].as_array().unwrap().is_empty());

    let o = emn(&[
        "verify-theorems",
        "--rot",
        &fixture("icosahedron_planar.rot"),
        "--rot",
        &fixture("k5_torus.rot"),
        "--format",
        "table",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));

    let o = emn(&["verify-theorems", "--vertices", "6", "--min-degree", "4", "--surface", "S0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify-lemmas", "--max-vertices", "5"];
    assert_eq!(emn(&args).stdout, emn(&args).stdout);
    let args = ["genus", "--g6", "IheA@GUAo"];
    assert_eq!(emn(&args).stdout, emn(&args).stdout);
}
