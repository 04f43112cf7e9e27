use std::fs;
use std::path::{Path, PathBuf};

use matroid_forge::cli::{run_args, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
use matroid_forge::corpus::k4_graph;
use matroid_forge::format::{parse_matroid, parse_tree, write_layered, write_ray};
use matroid_forge::{c4_ray, q_ray, Matroid};
use tempfile::TempDir;

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> (i32, String) {
    let o = run_args(std::iter::once("matroid-forge").chain(args.iter().copied()));
    (o.code, o.report)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FIVE_EDGES: &str = "edge a 1 2\nedge b 2 3\nedge s 1 3\nedge c 1 4\nedge d 4 3\n";

#[test]
fn roundtrip_on_k4_holds() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "k4.matroid", &k4_graph().cycle_matroid().to_string());
    assert_eq!(run(&["roundtrip", s(&f)]), (EXIT_OK, "identity holds (1 nodes)\n".into()));
}

#[test]
fn validate_reports_elimination_failure() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "bad.matroid", "ground: a b c\ncircuit: a b\ncircuit: b c\n");
    let (code, report) = run(&["validate", s(&f)]);
    assert_eq!(code, EXIT_VIOLATION);
    assert!(report.contains("axiom C3 violated"), "{report}");
    let ok = put(&dir, "ok.matroid", "ground: a b c\ncircuit: a b c\n");
    assert_eq!(run(&["validate", s(&ok)]), (EXIT_OK, "valid matroid: 3 elements, rank 2, 1 circuits\n".into()));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "junk.matroid", "ground: a b\nnonsense here\n");
    let (code, report) = run(&["dual", s(&f)]);
    assert_eq!(code, EXIT_INPUT);
    assert!(report.contains("line 2"), "{report}");
}

#[test]
fn ray_analysis_of_both_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = put(&dir, "c4.ray", &write_ray(&c4_ray()));
    let (code, report) = run(&["ray-analyze", s(&c4), "--depth", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(report.contains("not nice"), "{report}");
    assert!(report.contains("0 finite circuits"), "{report}");
    let q = put(&dir, "q.ray", &write_ray(&q_ray()));
    let (code, report) = run(&["ray-analyze", s(&q), "--depth", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(report.contains("\nnice\n") && report.contains("gluings at window 3: differ"), "{report}");
    assert!(report.contains("shared end false"), "{report}");
}

#[test]
fn decompose_then_reconstruct() {
    let dir = TempDir::new().unwrap();
    let m = put(&dir, "five.matroid", FIVE_EDGES);
    let dot = dir.path().join("five.dot");
    let (code, tree) = run(&["decompose", s(&m), "--dot", s(&dot)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_tree(&tree).unwrap().nodes().len(), 3);
    let dot_text = fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("graph tree {"));
    assert_eq!(dot_text.matches(" -- ").count(), 2);
    let t = put(&dir, "five.tree", &tree);
    let (code, glued) = run(&["reconstruct", s(&t)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_matroid(&glued).unwrap(), parse_matroid(FIVE_EDGES).unwrap());
    assert_eq!(run(&["tree-check", s(&t)]).0, EXIT_OK);
    // output is byte-stable
    assert_eq!(run(&["decompose", s(&m)]).1, tree);
}

#[test]
fn two_sum_of_triangles() {
    let dir = TempDir::new().unwrap();
    let a = put(&dir, "a.matroid", "ground: a b e\ncircuit: a b e\n");
    let b = put(&dir, "b.matroid", "ground: c d e\ncircuit: c d e\n");
    let (code, out) = run(&["two-sum", s(&a), s(&b), "--shared", "e"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_matroid(&out).unwrap(), Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap());
    let (code, _) = run(&["two-sum", s(&a), s(&b), "--shared", "z"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn minor_dual_and_scrawl() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "five.matroid", FIVE_EDGES);
    let (code, out) = run(&["minor", s(&f), "--contract", "s", "--delete", "c"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "ground: a b d\ncircuit: a b\n");
    let (code, out) = run(&["dual", s(&f)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_matroid(&out).unwrap().dual(), parse_matroid(FIVE_EDGES).unwrap());
    let (_, out) = run(&["scrawl", s(&f), "--set", "a,b,s"]);
    assert!(out.starts_with("scrawl: union of\n  a b s\n"), "{out}");
    let (_, out) = run(&["scrawl", s(&f), "--set", "a,b"]);
    assert!(out.starts_with("not a scrawl"), "{out}");
}

#[test]
fn ladder_analysis() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "ladder.layered", &write_layered(&matroid_forge::layered::ladder()));
    let (code, out) = run(&["graph-analyze", s(&f), "--psi", "end", "--depth", "3", "--verbose"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("disjoint true"), "{out}");
    let (code, _) = run(&["graph-analyze", s(&f), "--psi", "sideways"]);
    assert_eq!(code, EXIT_INPUT);
}
