//! Fixed test corpus: named matroids, every small connected simple graph,
//! named multigraphs, trees of matroids and hand-mutated non-matroids.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{canonical_decompose, decomposition_tree};
use crate::error::Axiom;
use crate::graph::FiniteGraph;
use crate::matroid::{default_labels, Matroid};
use crate::ray::k4_matroid;
use crate::tree::MatroidTree;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Largest edge count of the generated simple graphs.
pub const MAX_GRAPH_EDGES: usize = 8;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone)]
pub struct CorpusMatroid {
    pub name: String,
    pub matroid: Matroid,
    /// The graph the matroid came from, if graphic by construction.
    pub graph: Option<FiniteGraph>,
}

#[derive(Debug, Clone)]
pub struct Mutation {
    pub name: &'static str,
    pub ground: Vec<String>,
    pub circuits: Vec<Vec<String>>,
    pub expected: Axiom,
}

type Simple = Vec<(u8, u8)>;

fn vertex_count(edges: &Simple) -> usize {
    edges.iter().map(|&(u, v)| u.max(v) as usize + 1).max().unwrap_or(0)
}

/// Least relabelled edge list over all vertex orders that respect a colour
/// refinement by degrees.
fn canonical_form(edges: &Simple) -> Simple {
    let n = vertex_count(edges);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = keys.iter().collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let next: Vec<usize> = keys.iter().map(|k| rank[k]).collect();
        let classes_before: BTreeSet<usize> = colour.iter().copied().collect();
        if distinct.len() == classes_before.len() {
            colour = next;
            break;
        }
        colour = next;
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<Simple> = None;
    let mut label = vec![0u8; n];
    fn assign(
        classes: &[Vec<usize>],
        ci: usize,
        next: u8,
        label: &mut Vec<u8>,
        edges: &Simple,
        best: &mut Option<Simple>,
    ) {
        if ci == classes.len() {
            let mut e: Simple = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (label[u as usize], label[v as usize]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                *best = Some(e);
            }
            return;
        }
        let mut order = classes[ci].clone();
        permute(&mut order, 0, &mut |perm| {
            for (k, &v) in perm.iter().enumerate() {
                label[v] = next + k as u8;
            }
            assign(classes, ci + 1, next + perm.len() as u8, label, edges, best);
        });
    }
    assign(&classes, 0, 0, &mut label, edges, &mut best);
    best.unwrap_or_default()
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Every connected simple graph with `1..=max_edges` edges, one per
/// isomorphism class, grown edge by edge.
pub fn connected_simple_graphs(max_edges: usize) -> Vec<Simple> {
    let mut level: BTreeSet<Simple> = BTreeSet::from([vec![(0, 1)]]);
    let mut all: Vec<Simple> = level.iter().cloned().collect();
    for _ in 1..max_edges {
        let mut next = BTreeSet::new();
        for g in &level {
            let n = vertex_count(g) as u8;
            let present: BTreeSet<(u8, u8)> = g.iter().copied().collect();
            for u in 0..n {
                for v in u + 1..=n {
                    if !present.contains(&(u, v)) {
                        let mut h = g.clone();
                        h.push((u, v));
                        next.insert(canonical_form(&h));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

fn graph_from_pairs(edges: &[(u8, u8)]) -> FiniteGraph {
    let labels = default_labels(edges.len());
    FiniteGraph::new(
        edges
            .iter()
            .zip(&labels)
            .map(|(&(u, v), l)| (l.clone(), u.to_string(), v.to_string())),
    )
    .expect("small graph")
}

fn graph(edges: &[(&str, &str, &str)]) -> FiniteGraph {
    FiniteGraph::new(edges.iter().copied()).expect("named graph")
}

pub fn k4_graph() -> FiniteGraph {
    graph(&[
        ("a", "1", "2"),
        ("b", "1", "3"),
        ("c", "1", "4"),
        ("d", "2", "3"),
        ("e", "2", "4"),
        ("f", "3", "4"),
    ])
}

/// Wheel with four spokes `s1..s4` and rim `r1..r4`.
pub fn wheel4_graph() -> FiniteGraph {
    graph(&[
        ("s1", "h", "1"),
        ("s2", "h", "2"),
        ("s3", "h", "3"),
        ("s4", "h", "4"),
        ("r1", "1", "2"),
        ("r2", "2", "3"),
        ("r3", "3", "4"),
        ("r4", "4", "1"),
    ])
}

const FANO_LINES: [[&str; 3]; 7] = [
    ["a", "b", "c"],
    ["a", "d", "e"],
    ["a", "f", "g"],
    ["b", "d", "f"],
    ["b", "e", "g"],
    ["c", "d", "g"],
    ["c", "e", "f"],
];

/// Circuits of the Fano plane: its seven lines and their complements.
pub fn fano_circuits() -> Vec<Vec<String>> {
    let all = default_labels(7);
    let mut out: Vec<Vec<String>> = Vec::new();
    for line in FANO_LINES {
        out.push(line.iter().map(|s| s.to_string()).collect());
        out.push(all.iter().filter(|l| !line.contains(&l.as_str())).cloned().collect());
    }
    out
}

pub fn fano() -> Matroid {
    Matroid::from_circuits(default_labels(7), fano_circuits()).expect("Fano plane")
}

/// Multigraphs with loops or parallel edges.
pub fn named_multigraphs() -> Vec<(&'static str, FiniteGraph)> {
    vec![
        ("loop", graph(&[("a", "1", "1")])),
        ("digon", graph(&[("a", "1", "2"), ("b", "1", "2")])),
        ("theta", graph(&[("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")])),
        ("two-loops-and-bridge", graph(&[("a", "1", "1"), ("b", "1", "1"), ("c", "1", "2")])),
        (
            "triangle-doubled-edge",
            graph(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "1")]),
        ),
        (
            "triangle-with-loop",
            graph(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "2", "2")]),
        ),
        (
            "fat-square",
            graph(&[
                ("a", "1", "2"),
                ("b", "1", "2"),
                ("c", "2", "3"),
                ("d", "3", "4"),
                ("e", "3", "4"),
                ("f", "4", "1"),
            ]),
        ),
        (
            "k4-doubled-edge",
            graph(&[
                ("a", "1", "2"),
                ("b", "1", "3"),
                ("c", "1", "4"),
                ("d", "2", "3"),
                ("e", "2", "4"),
                ("f", "3", "4"),
                ("g", "3", "4"),
            ]),
        ),
        (
            "theta-with-tails",
            graph(&[
                ("a", "1", "2"),
                ("b", "2", "3"),
                ("c", "1", "4"),
                ("d", "4", "3"),
                ("e", "1", "3"),
                ("f", "3", "5"),
                ("g", "5", "5"),
                ("h", "5", "6"),
            ]),
        ),
    ]
}

/// All graphs of the corpus: generated simple graphs then named multigraphs.
pub fn corpus_graphs() -> &'static [(String, FiniteGraph)] {
    static GRAPHS: OnceLock<Vec<(String, FiniteGraph)>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut out: Vec<(String, FiniteGraph)> = Vec::new();
        let mut per_size: BTreeMap<usize, usize> = BTreeMap::new();
        for g in connected_simple_graphs(MAX_GRAPH_EDGES) {
            let k = per_size.entry(g.len()).or_default();
            out.push((format!("graph{}-{}", g.len(), k), graph_from_pairs(&g)));
            *k += 1;
        }
        out.extend(named_multigraphs().into_iter().map(|(n, g)| (n.to_string(), g)));
        out
    })
}

/// Named matroids: uniform matroids on at most seven elements, `M(K4)`,
/// `M(K4 - e)`, the wheel `W4` and the Fano plane.
pub fn named_matroids() -> Vec<CorpusMatroid> {
    let mut out = Vec::new();
    for n in 1..=7 {
        for r in 0..=n {
            out.push(CorpusMatroid {
                name: format!("U{r},{n}"),
                matroid: Matroid::uniform_n(r, n).expect("r <= n"),
                graph: None,
            });
        }
    }
    let k4 = k4_graph();
    let k4e = graph(&[
        ("a", "1", "2"),
        ("b", "1", "3"),
        ("c", "1", "4"),
        ("d", "2", "3"),
        ("f", "3", "4"),
    ]);
    for (name, g) in [("K4", k4), ("K4-e", k4e), ("W4", wheel4_graph())] {
        out.push(CorpusMatroid {
            name: name.into(),
            matroid: g.cycle_matroid(),
            graph: Some(g),
        });
    }
    out.push(CorpusMatroid {
        name: "Fano".into(),
        matroid: fano(),
        graph: None,
    });
    out
}

/// Named matroids followed by the cycle matroids of all corpus graphs.
pub fn corpus() -> &'static [CorpusMatroid] {
    static CORPUS: OnceLock<Vec<CorpusMatroid>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = named_matroids();
        out.extend(corpus_graphs().iter().map(|(name, g)| CorpusMatroid {
            name: name.clone(),
            matroid: g.cycle_matroid(),
            graph: Some(g.clone()),
        }));
        out
    })
}

fn labels(sets: &[&str]) -> Vec<Vec<String>> {
    sets.iter()
        .map(|s| s.split_whitespace().map(str::to_string).collect())
        .collect()
}

fn circuits_of(m: &Matroid) -> Vec<Vec<String>> {
    m.circuit_labels()
}

fn without(mut family: Vec<Vec<String>>, drop: &[&str]) -> Vec<Vec<String>> {
    let gone: BTreeSet<Vec<String>> = labels(drop).into_iter().collect();
    let before = family.len();
    family.retain(|c| !gone.contains(c));
    assert_eq!(before - family.len(), drop.len(), "mutation drops known circuits");
    family
}

fn with(mut family: Vec<Vec<String>>, add: &[&str]) -> Vec<Vec<String>> {
    family.extend(labels(add));
    family
}

/// Twenty circuit families that are not matroids, each tagged with the first
/// axiom (in the order C1, C2, C3) that fails.
pub fn mutations() -> Vec<Mutation> {
    let k4 = k4_matroid();
    let k4c = circuits_of(&k4);
    let fano_c = circuits_of(&fano());
    let w4 = wheel4_graph().cycle_matroid();
    let g = |n: usize| default_labels(n);
    let m = |name, ground: Vec<String>, circuits, expected| Mutation {
        name,
        ground,
        circuits,
        expected,
    };
    let mut empty_circuit = vec![Vec::new()];
    empty_circuit.extend(labels(&["a b c"]));
    let mut k4_empty = k4c.clone();
    k4_empty.push(Vec::new());
    let u24 = circuits_of(&Matroid::uniform_n(2, 4).unwrap());
    let u35 = circuits_of(&Matroid::uniform_n(3, 5).unwrap());
    vec![
        m("triangle-plus-empty", g(3), empty_circuit, Axiom::C1),
        m("k4-plus-empty", k4.ground().to_vec(), k4_empty, Axiom::C1),
        m("empty-only", g(2), vec![Vec::new()], Axiom::C1),
        m("nested-pair", g(3), labels(&["a b", "a b c"]), Axiom::C2),
        m("k4-plus-superset", k4.ground().to_vec(), with(k4c.clone(), &["a b c d"]), Axiom::C2),
        m("u24-plus-pair", g(4), with(u24.clone(), &["a b"]), Axiom::C2),
        m("loop-inside-pair", g(2), labels(&["a", "a b"]), Axiom::C2),
        m("fano-plus-pair", g(7), with(fano_c.clone(), &["a b"]), Axiom::C2),
        m("two-overlapping-pairs", g(3), labels(&["a b", "b c"]), Axiom::C3),
        m("k4-minus-square", k4.ground().to_vec(), without(k4c.clone(), &["a c d f"]), Axiom::C3),
        m("k4-minus-triangle", k4.ground().to_vec(), without(k4c.clone(), &["a b d"]), Axiom::C3),
        m("fano-minus-line", g(7), without(fano_c.clone(), &["a b c"]), Axiom::C3),
        m("fano-minus-coline", g(7), without(fano_c, &["d e f g"]), Axiom::C3),
        m("u35-minus-quadruple", g(5), without(u35, &["a b c d"]), Axiom::C3),
        m("triangles-without-square", g(5), labels(&["a b c", "c d e"]), Axiom::C3),
        m("triangle-and-crossing-pair", g(4), labels(&["a b c", "c d"]), Axiom::C3),
        m("broken-parallel-class", g(3), labels(&["a b", "a c"]), Axiom::C3),
        m(
            "k4-minus-two-squares",
            k4.ground().to_vec(),
            without(k4c, &["a c d f", "a b e f"]),
            Axiom::C3,
        ),
        m(
            "wheel-minus-rim",
            w4.ground().to_vec(),
            without(circuits_of(&w4), &["r1 r2 r3 r4"]),
            Axiom::C3,
        ),
        m("u24-minus-triple", g(4), without(u24, &["a b c"]), Axiom::C3),
    ]
}

/// Small hand-built trees of matroids.
pub fn named_trees() -> Vec<(String, MatroidTree)> {
    let tri = |l: [&str; 3]| Matroid::uniform(2, l).expect("triangle");
    let co = |l: [&str; 3]| Matroid::uniform(1, l).expect("triad");
    let k4b = k4_matroid()
        .relabel(|l| if l == "a" { "x".into() } else { format!("{l}2") })
        .expect("relabel");
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let path = |parts: Vec<Matroid>, shared: &[&str]| MatroidTree::path(&parts, &s(shared)).expect("path tree");
    let star = MatroidTree::new(
        vec![
            ("hub".into(), tri(["x", "y", "z"])),
            ("t1".into(), tri(["a", "b", "x"])),
            ("t2".into(), tri(["c", "d", "y"])),
            ("t3".into(), tri(["e", "f", "z"])),
        ],
        vec![
            ("hub".into(), "t1".into(), "x".into()),
            ("hub".into(), "t2".into(), "y".into()),
            ("hub".into(), "t3".into(), "z".into()),
        ],
    )
    .expect("star tree");
    let k4x = k4_matroid().relabel(|l| if l == "a" { "x".into() } else { l.to_string() }).expect("relabel");
    vec![
        ("two-triangles".into(), path(vec![tri(["a", "b", "x"]), tri(["x", "c", "d"])], &["x"])),
        (
            "triangle-chain".into(),
            path(vec![tri(["a", "b", "x"]), tri(["x", "c", "y"]), tri(["y", "d", "e"])], &["x", "y"]),
        ),
        ("triangle-star".into(), star),
        ("k4-triangle".into(), path(vec![k4x.clone(), tri(["x", "g", "h"])], &["x"])),
        ("k4-k4".into(), path(vec![k4x, k4b], &["x"])),
        ("triad-chain".into(), path(vec![co(["a", "b", "x"]), co(["x", "c", "d"])], &["x"])),
        (
            "mixed-chain".into(),
            path(
                vec![
                    Matroid::uniform(2, ["a", "b", "c", "x"]).unwrap(),
                    co(["x", "d", "y"]),
                    tri(["y", "e", "f"]),
                ],
                &["x", "y"],
            ),
        ),
        (
            "fano-triangle".into(),
            path(
                vec![fano().relabel(|l| if l == "a" { "x".into() } else { l.to_string() }).unwrap(), tri(["x", "h", "i"])],
                &["x"],
            ),
        ),
    ]
}

/// Named trees plus the canonical decomposition trees of every connected
/// corpus matroid that splits into at least two nodes.
pub fn corpus_trees() -> &'static [(String, MatroidTree)] {
    static TREES: OnceLock<Vec<(String, MatroidTree)>> = OnceLock::new();
    TREES.get_or_init(|| {
        let mut out = named_trees();
        for c in corpus() {
            let m = &c.matroid;
            if m.len() < 4 || !m.is_connected() {
                continue;
            }
            let d = canonical_decompose(m).expect("connected");
            if d.decomposition.node_count() >= 2 {
                out.push((
                    format!("{}-decomposition", c.name),
                    decomposition_tree(m, &d.decomposition).expect("valid decomposition"),
                ));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequence() {
        // connected simple graphs by edge count
        let counts: Vec<usize> = (1..=7)
            .map(|m| connected_simple_graphs(7).iter().filter(|g| g.len() == m).count())
            .collect();
        assert_eq!(counts, [1, 1, 3, 5, 12, 30, 79]);
    }

    #[test]
    fn fano_has_fourteen_circuits() {
        assert_eq!(fano().circuits().len(), 14);
        assert_eq!(fano().rank(), 3);
    }

    #[test]
    fn mutations_are_rejected() {
        assert_eq!(mutations().len(), 20);
        for m in mutations() {
            match Matroid::from_circuits(&m.ground, &m.circuits) {
                Err(crate::Error::AxiomViolation { axiom, .. }) => assert_eq!(axiom, m.expected, "{}", m.name),
                other => panic!("{}: {other:?}", m.name),
            }
        }
    }

    #[test]
    fn named_trees_validate() {
        for (name, t) in named_trees() {
            t.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
