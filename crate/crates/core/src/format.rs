//! Text formats for matroids, graphs, trees, rays and layered graphs.
//!
//! All formats are line based and whitespace delimited; `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::layered::LayeredGraph;
use crate::matroid::Matroid;
use crate::ray::RayTree;
use crate::tree::MatroidTree;

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

/// Non-empty lines with comments stripped, as `(1-based line, tokens)`.
fn tokenize(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            (!toks.is_empty()).then_some((i + 1, toks))
        })
        .collect()
}

/// Splits `ground:` / `circuit:` keywords that may be glued to the first label.
fn keyword<'a>(toks: &[&'a str]) -> (&'a str, Vec<&'a str>) {
    let first = toks[0];
    match first.split_once(':') {
        Some((k, rest)) => {
            let mut args = Vec::new();
            if !rest.is_empty() {
                args.push(rest);
            }
            args.extend_from_slice(&toks[1..]);
            (k, args)
        }
        None => (first, toks[1..].to_vec()),
    }
}

/// A matroid given by `ground:`/`circuit:` lines or by `edge` lines.
fn matroid_block(lines: &[(usize, Vec<&str>)], start: usize) -> Result<Matroid> {
    let mut ground: Option<Vec<String>> = None;
    let mut circuits: Vec<Vec<String>> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for (line, toks) in lines {
        let (k, args) = keyword(toks);
        match k {
            "ground" if toks[0].contains(':') => {
                if ground.is_some() {
                    return Err(parse_err(*line, "second `ground:` line"));
                }
                if !circuits.is_empty() {
                    return Err(parse_err(*line, "`ground:` must come before circuits"));
                }
                ground = Some(args.iter().map(|s| s.to_string()).collect());
            }
            "circuit" if toks[0].contains(':') => {
                if ground.is_none() {
                    return Err(parse_err(*line, "`circuit:` before `ground:`"));
                }
                circuits.push(args.iter().map(|s| s.to_string()).collect());
            }
            "edge" => {
                if args.len() != 3 {
                    return Err(parse_err(*line, "expected `edge <label> <u> <v>`"));
                }
                edges.push((args[0].into(), args[1].into(), args[2].into()));
            }
            other => return Err(parse_err(*line, format!("unexpected `{other}`"))),
        }
    }
    match (ground, edges.is_empty()) {
        (Some(_), false) => Err(parse_err(start, "mixes `ground:` and `edge` lines")),
        (Some(g), true) => Matroid::from_circuits(g, circuits),
        (None, false) => Ok(FiniteGraph::new(edges)?.cycle_matroid()),
        (None, true) => Err(parse_err(start, "missing `ground:` line")),
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    matroid_block(&tokenize(text), 1)
}

pub fn parse_graph(text: &str) -> Result<FiniteGraph> {
    let mut edges = Vec::new();
    for (line, toks) in tokenize(text) {
        if toks[0] != "edge" || toks.len() != 4 {
            return Err(parse_err(line, "expected `edge <label> <u> <v>`"));
        }
        edges.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
    }
    FiniteGraph::new(edges)
}

/// Writes a graph in the `edge` line format.
pub fn write_graph(g: &FiniteGraph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.label, g.vertices()[e.u], g.vertices()[e.v]);
    }
    out
}

/// `node <id>` blocks holding matroids, and `treeedge <a> <b> <dummy>` lines.
pub fn parse_tree(text: &str) -> Result<MatroidTree> {
    let lines = tokenize(text);
    let mut nodes: Vec<(String, Matroid)> = Vec::new();
    let mut edges = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line, toks) = &lines[i];
        match toks[0] {
            "node" => {
                if toks.len() != 2 {
                    return Err(parse_err(*line, "expected `node <id>`"));
                }
                let end = (i + 1..lines.len())
                    .find(|&j| matches!(lines[j].1[0], "node" | "treeedge"))
                    .unwrap_or(lines.len());
                nodes.push((toks[1].to_string(), matroid_block(&lines[i + 1..end], *line)?));
                i = end;
            }
            "treeedge" => {
                if toks.len() != 4 {
                    return Err(parse_err(*line, "expected `treeedge <id1> <id2> <dummy>`"));
                }
                edges.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
                i += 1;
            }
            other => return Err(parse_err(*line, format!("unexpected `{other}`"))),
        }
    }
    if nodes.is_empty() {
        return Err(parse_err(1, "no `node` blocks"));
    }
    MatroidTree::new(nodes, edges)
}

pub fn write_tree(t: &MatroidTree) -> String {
    let mut out = String::new();
    for n in t.nodes() {
        let _ = writeln!(out, "node {}", n.id);
        out.push_str(&n.matroid.to_string());
    }
    for e in t.edges() {
        let _ = writeln!(out, "treeedge {} {} {}", t.nodes()[e.a].id, t.nodes()[e.b].id, e.dummy);
    }
    out
}

/// `prefixnode` / `periodnode` blocks of matroid lines plus dummy lines.
pub fn parse_ray(text: &str) -> Result<RayTree> {
    let lines = tokenize(text);
    let mut prefix = Vec::new();
    let mut period = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line, toks) = &lines[i];
        let kind = toks[0];
        if !matches!(kind, "prefixnode" | "periodnode") || toks.len() != 1 {
            return Err(parse_err(*line, "expected `prefixnode` or `periodnode`"));
        }
        let end = (i + 1..lines.len())
            .find(|&j| matches!(lines[j].1[0], "prefixnode" | "periodnode"))
            .unwrap_or(lines.len());
        let (mut left, mut right) = (None, None);
        let mut body = Vec::new();
        for (l, t) in &lines[i + 1..end] {
            let slot = match t[0] {
                "leftdummy" => &mut left,
                "rightdummy" => &mut right,
                _ => {
                    body.push((*l, t.clone()));
                    continue;
                }
            };
            if t.len() != 2 || slot.is_some() {
                return Err(parse_err(*l, format!("expected one `{} <label>`", t[0])));
            }
            *slot = Some(t[1].to_string());
        }
        let m = matroid_block(&body, *line)?;
        let right = right.ok_or_else(|| parse_err(*line, "missing `rightdummy`"))?;
        if kind == "prefixnode" {
            if !period.is_empty() {
                return Err(parse_err(*line, "`prefixnode` after `periodnode`"));
            }
            let expected: Option<&String> = prefix.last().map(|(_, r)| r);
            if left.is_some() && left.as_ref() != expected {
                return Err(parse_err(*line, "`leftdummy` must repeat the previous `rightdummy`"));
            }
            prefix.push((m, right));
        } else {
            let left = left.ok_or_else(|| parse_err(*line, "missing `leftdummy`"))?;
            period.push((m, left, right));
        }
        i = end;
    }
    RayTree::new(prefix, period)
}

pub fn write_ray(r: &RayTree) -> String {
    let mut out = String::new();
    for (kind, nodes) in [("prefixnode", r.prefix()), ("periodnode", r.period())] {
        for n in nodes {
            let _ = writeln!(out, "{kind}");
            out.push_str(&n.matroid.to_string());
            if let Some(l) = &n.left {
                let _ = writeln!(out, "leftdummy {l}");
            }
            let _ = writeln!(out, "rightdummy {}", n.right);
        }
    }
    out
}

/// `prefix` and `layer` blocks of `edge` lines; the layer block also holds
/// `leftboundary` and `rightboundary` lines.
pub fn parse_layered(text: &str) -> Result<LayeredGraph> {
    let mut prefix = Vec::new();
    let mut layer = Vec::new();
    let (mut left, mut right) = (None, None);
    let mut section: Option<&str> = None;
    for (line, toks) in tokenize(text) {
        match toks[0] {
            "prefix" | "layer" if toks.len() == 1 => section = Some(toks[0]),
            "edge" => {
                if toks.len() != 4 {
                    return Err(parse_err(line, "expected `edge <label> <u> <v>`"));
                }
                let e = (toks[1].to_string(), toks[2].to_string(), toks[3].to_string());
                match section {
                    Some("prefix") => prefix.push(e),
                    Some("layer") => layer.push(e),
                    _ => return Err(parse_err(line, "`edge` outside a `prefix` or `layer` block")),
                }
            }
            "leftboundary" | "rightboundary" => {
                if section != Some("layer") {
                    return Err(parse_err(line, "boundaries belong in the `layer` block"));
                }
                let slot = if toks[0] == "leftboundary" { &mut left } else { &mut right };
                if slot.is_some() {
                    return Err(parse_err(line, format!("second `{}` line", toks[0])));
                }
                *slot = Some(toks[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>());
            }
            other => return Err(parse_err(line, format!("unexpected `{other}`"))),
        }
    }
    LayeredGraph::new(prefix, layer, left.unwrap_or_default(), right.unwrap_or_default())
}

pub fn write_layered(g: &LayeredGraph) -> String {
    let mut out = String::from("prefix\n");
    for (l, u, v) in g.prefix_edges() {
        let _ = writeln!(out, "edge {l} {u} {v}");
    }
    if !g.is_finite() {
        out.push_str("layer\n");
        for (l, u, v) in g.layer_edges() {
            let _ = writeln!(out, "edge {l} {u} {v}");
        }
        let _ = writeln!(out, "leftboundary {}", g.left_boundary().join(" "));
        let _ = writeln!(out, "rightboundary {}", g.right_boundary().join(" "));
    }
    out
}

pub fn read_text(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layered::ladder;
    use crate::ray::{c4_ray, q_ray};

    #[test]
    fn matroid_round_trip_and_comments() {
        let text = "# triangle\nground: a b c\ncircuit: a b c  # all three\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m, Matroid::uniform(2, ["a", "b", "c"]).unwrap());
        assert_eq!(parse_matroid(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn matroid_from_edges() {
        let m = parse_matroid("edge x 1 2\nedge y 2 3\nedge z 3 1\n").unwrap();
        assert_eq!(m.circuits().len(), 1);
    }

    #[test]
    fn parse_errors_carry_lines() {
        match parse_matroid("ground: a b\nbogus: a\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_matroid("circuit: a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matroid("ground: a\ncircuit: b\n"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn tree_round_trip() {
        let text = "node A\nground: a b e\ncircuit: a b e\nnode B\nedge c 1 2\nedge d 2 3\nedge e 3 1\ntreeedge A B e\n";
        let t = parse_tree(text).unwrap();
        assert_eq!(t.glue().unwrap(), Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap());
        assert_eq!(parse_tree(&write_tree(&t)).unwrap(), t);
    }

    #[test]
    fn ray_round_trip() {
        for r in [q_ray(), c4_ray()] {
            assert_eq!(parse_ray(&write_ray(&r)).unwrap(), r);
        }
        assert!(matches!(
            parse_ray("periodnode\nground: l r\ncircuit: l r\nrightdummy r\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn layered_round_trip() {
        let g = ladder();
        assert_eq!(parse_layered(&write_layered(&g)).unwrap(), g);
        assert!(matches!(
            parse_layered("edge x a b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
