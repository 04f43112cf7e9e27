//! Graphviz output for trees of matroids.

use std::fmt::Write as _;
use std::path::Path;

use crate::decomposition::{classify, decomposition_tree, TreeDecomposition};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::tree::MatroidTree;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph: node label `kind|elements`, edge label the dummy.
pub fn tree_to_dot(tree: &MatroidTree) -> String {
    let mut out = String::from("graph tree {\n");
    for n in tree.nodes() {
        let kind = classify(&n.matroid).map_or_else(|| "other".to_string(), |k| k.to_string());
        let label = format!("{kind}|{}", n.matroid.ground().join(" "));
        let _ = writeln!(out, "  {} [label={}];", quote(&n.id), quote(&label));
    }
    for e in tree.edges() {
        let (a, b) = (&tree.nodes()[e.a].id, &tree.nodes()[e.b].id);
        let _ = writeln!(out, "  {} -- {} [label={}];", quote(a), quote(b), quote(&e.dummy));
    }
    out.push_str("}\n");
    out
}

pub fn decomposition_to_dot(n: &Matroid, d: &TreeDecomposition) -> Result<String> {
    Ok(tree_to_dot(&decomposition_tree(n, d)?))
}

pub fn emit_dot(dot: &str, path: &Path) -> Result<()> {
    std::fs::write(path, dot)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::canonical_decompose;
    use crate::graph::FiniteGraph;
    use crate::ray::q_ray;

    #[test]
    fn single_node() {
        let t = MatroidTree::single("t0", Matroid::uniform(2, ["a", "b", "c"]).unwrap());
        assert_eq!(
            tree_to_dot(&t),
            "graph tree {\n  \"t0\" [label=\"circuit|a b c\"];\n}\n"
        );
    }

    #[test]
    fn five_edge_example_is_a_path() {
        let g = FiniteGraph::new([
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("s", "1", "3"),
            ("c", "1", "4"),
            ("d", "4", "3"),
        ])
        .unwrap();
        let n = g.cycle_matroid();
        let c = canonical_decompose(&n).unwrap();
        let dot = decomposition_to_dot(&n, &c.decomposition).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert_eq!(dot.matches("label=\"circuit|").count(), 2);
        assert_eq!(dot.matches("label=\"cocircuit|").count(), 1);
        assert_eq!(dot, decomposition_to_dot(&n, &c.decomposition).unwrap());
    }

    #[test]
    fn q_ray_window_is_a_path() {
        let dot = tree_to_dot(&q_ray().unroll(3).unwrap().tree);
        assert_eq!(dot.matches("[label=\"3-connected|").count(), 3);
        assert!(dot.contains("\"n0\" -- \"n1\" [label=\"f#0\"];"));
        assert!(dot.contains("\"n1\" -- \"n2\" [label=\"f#1\"];"));
    }
}
