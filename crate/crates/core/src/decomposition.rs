//! Tree decompositions of adhesion 2: torsos, the canonical decomposition
//! into circuits, cocircuits and 3-connected pieces, and reconstruction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{canonical_family, minimal_members, ElemSet};
use crate::tree::{MatroidTree, Precircuit};

/// A tree together with a partition of the ground set indexed by its nodes.
/// Parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub parts: Vec<ElemSet>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorsoKind {
    Circuit,
    Cocircuit,
    ThreeConnected,
}

impl fmt::Display for TorsoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorsoKind::Circuit => "circuit",
            TorsoKind::Cocircuit => "cocircuit",
            TorsoKind::ThreeConnected => "3-connected",
        })
    }
}

/// Classifies a torso; `None` when it has fewer than three elements or is
/// none of the three kinds.
pub fn classify(m: &Matroid) -> Option<TorsoKind> {
    let n = m.len();
    if n < 3 {
        None
    } else if m.is_uniform(n - 1) {
        Some(TorsoKind::Circuit)
    } else if m.is_uniform(1) {
        Some(TorsoKind::Cocircuit)
    } else if m.is_three_connected() {
        Some(TorsoKind::ThreeConnected)
    } else {
        None
    }
}

/// Output of [`canonical_decompose`]: the decomposition, its torsos and
/// their kinds (`None` only for inputs with at most two elements).
#[derive(Debug, Clone)]
pub struct CanonicalDecomposition {
    pub decomposition: TreeDecomposition,
    pub torsos: Vec<Matroid>,
    pub kinds: Vec<Option<TorsoKind>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub split_families_checked: usize,
    pub valid_decompositions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub nodes: usize,
    pub identity: bool,
}

impl TreeDecomposition {
    pub fn single(n: usize) -> Self {
        TreeDecomposition {
            parts: vec![ElemSet::full(n)],
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.parts.len()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Union of the parts on `toward`'s side of the edge `from`–`toward`.
    pub fn branch(&self, from: usize, toward: usize) -> ElemSet {
        let mut seen = BTreeSet::from([from, toward]);
        let mut stack = vec![toward];
        let mut acc = ElemSet::EMPTY;
        while let Some(v) = stack.pop() {
            acc = acc.union(self.parts[v]);
            for w in self.neighbours(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        acc
    }

    /// Checks the tree shape, the partition and that every edge has
    /// connectivity at most 1.
    pub fn validate(&self, n: &Matroid) -> Result<()> {
        let k = self.parts.len();
        if k == 0 || self.edges.len() + 1 != k {
            return Err(Error::InvalidDecomposition("not a tree".into()));
        }
        let mut reach = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if reach.insert(w) {
                    stack.push(w);
                }
            }
        }
        if reach.len() != k {
            return Err(Error::InvalidDecomposition("tree is disconnected".into()));
        }
        let mut covered = ElemSet::EMPTY;
        for p in &self.parts {
            if !p.is_disjoint(covered) {
                return Err(Error::InvalidDecomposition("parts overlap".into()));
            }
            covered = covered.union(*p);
        }
        if covered != n.ground_set() {
            return Err(Error::InvalidDecomposition("parts do not cover the ground set".into()));
        }
        for &(a, b) in &self.edges {
            let side = self.branch(a, b);
            if n.connectivity(side) > 1 {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {a}-{b} separates {:?} with connectivity {}",
                    n.labels(side),
                    n.connectivity(side)
                )));
            }
        }
        Ok(())
    }

    /// Dummy labels, one per edge, avoiding every label of `n`.
    pub fn dummy_labels(&self, n: &Matroid) -> Vec<String> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                let mut l = format!("_d{}_{}", a.min(b), a.max(b));
                while n.contains_label(&l) {
                    l.insert(0, '_');
                }
                l
            })
            .collect()
    }

    /// The splits of the ground set induced by the edges, each given by the
    /// side containing element 0, in canonical order.
    pub fn splits(&self, n: &Matroid) -> Vec<ElemSet> {
        let full = n.ground_set();
        canonical_family(
            self.edges
                .iter()
                .map(|&(a, b)| {
                    let s = self.branch(a, b);
                    if s.contains(0) {
                        s
                    } else {
                        full.difference(s)
                    }
                })
                .collect(),
        )
    }
}

/// `ô(v)` for the circuit `o`: its part at `v` plus the dummy of every
/// incident edge whose side `o` meets. `None` when `o` lies inside a single
/// branch at `v`.
fn hat(d: &TreeDecomposition, v: usize, o: ElemSet) -> Option<(ElemSet, Vec<usize>)> {
    let inside = o.intersection(d.parts[v]);
    let met: Vec<usize> = d
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| {
            let far = if a == v {
                b
            } else if b == v {
                a
            } else {
                return false;
            };
            !o.is_disjoint(d.branch(v, far))
        })
        .map(|(i, _)| i)
        .collect();
    if inside.is_empty() && met.len() <= 1 {
        return None;
    }
    Some((inside, met))
}

/// The torso at `v`: the part at `v` plus one dummy per incident edge.
pub fn torso(n: &Matroid, d: &TreeDecomposition, v: usize) -> Result<Matroid> {
    d.validate(n)?;
    torso_unchecked(n, d, v, &d.dummy_labels(n))
}

fn torso_unchecked(n: &Matroid, d: &TreeDecomposition, v: usize, dummies: &[String]) -> Result<Matroid> {
    let incident: Vec<usize> = (0..d.edges.len())
        .filter(|&i| d.edges[i].0 == v || d.edges[i].1 == v)
        .collect();
    let mut ground: Vec<String> = n.labels(d.parts[v]);
    ground.extend(incident.iter().map(|&i| dummies[i].clone()));
    ground.sort();
    let pos = |l: &str| ground.binary_search_by(|g| g.as_str().cmp(l)).expect("in torso ground");
    let mut sets = Vec::new();
    for &o in n.circuits() {
        if let Some((inside, met)) = hat(d, v, o) {
            let mut s: ElemSet = n.labels(inside).iter().map(|l| pos(l)).collect();
            for i in met {
                s = s.with(pos(&dummies[i]));
            }
            sets.push(s);
        }
    }
    Matroid::from_sets(ground.clone(), minimal_members(sets))
        .map_err(|e| Error::InvalidDecomposition(format!("torso at node {v} is not a matroid: {e}")))
}

/// The tree of matroids carrying the torsos, joined by the dummies.
pub fn decomposition_tree(n: &Matroid, d: &TreeDecomposition) -> Result<MatroidTree> {
    d.validate(n)?;
    let dummies = d.dummy_labels(n);
    let nodes = (0..d.node_count())
        .map(|v| Ok((format!("v{v}"), torso_unchecked(n, d, v, &dummies)?)))
        .collect::<Result<Vec<_>>>()?;
    let edges = d
        .edges
        .iter()
        .zip(&dummies)
        .map(|(&(a, b), l)| (format!("v{a}"), format!("v{b}"), l.clone()))
        .collect();
    MatroidTree::new(nodes, edges)
}

/// The precircuit `(S_o, ô)` induced by the circuit `o` of `n`.
pub fn circuit_precircuit(n: &Matroid, d: &TreeDecomposition, o: ElemSet) -> Result<Precircuit> {
    if !n.is_circuit(o) {
        return Err(Error::PreconditionViolated(format!("{:?} is not a circuit", n.labels(o))));
    }
    let tree = decomposition_tree(n, d)?;
    let dummies = d.dummy_labels(n);
    let mut choices = Vec::new();
    for v in 0..d.node_count() {
        if let Some((inside, met)) = hat(d, v, o) {
            let torso = &tree.nodes()[v].matroid;
            let mut labels = n.labels(inside);
            labels.extend(met.iter().map(|&i| dummies[i].clone()));
            choices.push((v, torso.set_of(labels)?));
        }
    }
    Ok(Precircuit { choices })
}

/// Glues a finite tree of matroids.
pub fn reconstruct(tree: &MatroidTree) -> Result<Matroid> {
    tree.glue()
}

/// Decomposes canonically and glues back.
pub fn roundtrip(n: &Matroid) -> Result<RoundTrip> {
    let c = canonical_decompose(n)?;
    let glued = reconstruct(&decomposition_tree(n, &c.decomposition)?)?;
    Ok(RoundTrip {
        nodes: c.decomposition.node_count(),
        identity: glued == *n,
    })
}

/// Splits on 2-separations of torsos until none is left, then merges
/// adjacent circuit torsos and adjacent cocircuit torsos.
pub fn canonical_decompose(n: &Matroid) -> Result<CanonicalDecomposition> {
    if n.is_empty() {
        return Err(Error::TooSmall("the ground set is empty".into()));
    }
    if !n.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut d = TreeDecomposition::single(n.len());
    if n.len() <= 2 {
        return Ok(CanonicalDecomposition {
            decomposition: d,
            torsos: vec![n.clone()],
            kinds: vec![None],
        });
    }
    'split: loop {
        let dummies = d.dummy_labels(n);
        for v in 0..d.node_count() {
            let t = torso_unchecked(n, &d, v, &dummies)?;
            let Some(sep) = t.two_separations().into_iter().next() else {
                continue;
            };
            let side_b: BTreeSet<String> = t.labels(sep.side_b).into_iter().collect();
            let w = d.node_count();
            let moved = n.set_of(n.labels(d.parts[v]).into_iter().filter(|l| side_b.contains(l)))?;
            d.parts[v] = d.parts[v].difference(moved);
            d.parts.push(moved);
            for (i, e) in d.edges.iter_mut().enumerate() {
                if side_b.contains(&dummies[i]) {
                    if e.0 == v {
                        e.0 = w;
                    } else {
                        e.1 = w;
                    }
                }
            }
            d.edges.push((v, w));
            continue 'split;
        }
        break;
    }
    loop {
        let torsos = all_torsos(n, &d)?;
        let kinds: Vec<Option<TorsoKind>> = torsos.iter().map(classify).collect();
        let Some(&(a, b)) = d.edges.iter().find(|&&(a, b)| {
            kinds[a] == kinds[b] && matches!(kinds[a], Some(TorsoKind::Circuit | TorsoKind::Cocircuit))
        }) else {
            d.validate(n)?;
            return Ok(CanonicalDecomposition {
                decomposition: d,
                torsos,
                kinds,
            });
        };
        d = merge(&d, a, b);
    }
}

fn all_torsos(n: &Matroid, d: &TreeDecomposition) -> Result<Vec<Matroid>> {
    let dummies = d.dummy_labels(n);
    (0..d.node_count())
        .map(|v| torso_unchecked(n, d, v, &dummies))
        .collect()
}

/// Contracts the edge `a`–`b`, keeping `a`.
fn merge(d: &TreeDecomposition, a: usize, b: usize) -> TreeDecomposition {
    let keep = a.min(b);
    let gone = a.max(b);
    let renum = |v: usize| {
        let v = if v == gone { keep } else { v };
        if v > gone {
            v - 1
        } else {
            v
        }
    };
    let mut parts = d.parts.clone();
    parts[keep] = parts[keep].union(parts[gone]);
    parts.remove(gone);
    let edges = d
        .edges
        .iter()
        .filter(|&&(x, y)| !((x == a && y == b) || (x == b && y == a)))
        .map(|&(x, y)| (renum(x), renum(y)))
        .collect();
    TreeDecomposition { parts, edges }
}

/// Whether the decomposition meets the canonical conditions: torsos of size
/// at least 3, each a circuit, a cocircuit or 3-connected, and no edge
/// joining two circuits or two cocircuits.
pub fn is_canonical_shape(n: &Matroid, d: &TreeDecomposition) -> Result<bool> {
    d.validate(n)?;
    let kinds: Vec<Option<TorsoKind>> = all_torsos(n, d)?.iter().map(classify).collect();
    if kinds.iter().any(Option::is_none) {
        return Ok(false);
    }
    Ok(d.edges.iter().all(|&(a, b)| {
        !(kinds[a] == kinds[b] && kinds[a] != Some(TorsoKind::ThreeConnected))
    }))
}

fn compatible(a: ElemSet, b: ElemSet, full: ElemSet) -> bool {
    let (ac, bc) = (full.difference(a), full.difference(b));
    a.is_disjoint(b) || a.is_disjoint(bc) || ac.is_disjoint(b) || ac.is_disjoint(bc)
}

/// Builds the tree whose edges induce exactly the given pairwise
/// compatible splits.
pub fn tree_from_splits(full: ElemSet, splits: &[ElemSet]) -> TreeDecomposition {
    let mut d = TreeDecomposition {
        parts: vec![full],
        edges: Vec::new(),
    };
    for &s in splits {
        let sc = full.difference(s);
        let v = (0..d.node_count())
            .find(|&v| {
                let branches: Vec<ElemSet> = d.neighbours(v).into_iter().map(|w| d.branch(v, w)).collect();
                let homogeneous = branches.iter().all(|b| b.is_subset(s) || b.is_subset(sc));
                let left = d.parts[v].intersection(s).union(
                    branches.iter().filter(|b| b.is_subset(s)).fold(ElemSet::EMPTY, |x, b| x.union(*b)),
                );
                homogeneous && left == s
            })
            .expect("compatible splits fit the tree");
        let w = d.node_count();
        let moved = d.parts[v].intersection(sc);
        d.parts[v] = d.parts[v].difference(moved);
        d.parts.push(moved);
        let far: Vec<usize> = d
            .neighbours(v)
            .into_iter()
            .filter(|&x| d.branch(v, x).is_subset(sc))
            .collect();
        for e in d.edges.iter_mut() {
            if e.0 == v && far.contains(&e.1) {
                e.0 = w;
            } else if e.1 == v && far.contains(&e.0) {
                e.1 = w;
            }
        }
        d.edges.push((v, w));
    }
    d
}

/// Enumerates every decomposition whose edges induce 2-separations and that
/// meets the canonical conditions, and checks they all have the same splits
/// as `d`. Decompositions are identified by their split sets.
pub fn verify_canonical(n: &Matroid, d: &TreeDecomposition) -> Result<UniquenessReport> {
    if n.len() > 6 {
        return Err(Error::PreconditionViolated(format!(
            "uniqueness enumeration needs at most 6 elements, got {}",
            n.len()
        )));
    }
    let full = n.ground_set();
    if n.len() < 3 {
        // no 2-separations exist, so the single node is the only tree
        d.validate(n)?;
        if d.node_count() != 1 {
            return Err(Error::UniquenessFailure(format!(
                "{} elements admit only the single-node decomposition",
                n.len()
            )));
        }
        return Ok(UniquenessReport {
            split_families_checked: 1,
            valid_decompositions: 1,
        });
    }
    let target = d.splits(n);
    let candidates: Vec<ElemSet> = canonical_family(
        n.two_separations()
            .into_iter()
            .map(|s| if s.side_a.contains(0) { s.side_a } else { s.side_b })
            .collect(),
    );
    let mut report = UniquenessReport {
        split_families_checked: 0,
        valid_decompositions: 0,
    };
    let mut chosen = Vec::new();
    let mut failure = None;
    search(n, full, &candidates, 0, &mut chosen, &target, &mut report, &mut failure)?;
    if let Some(w) = failure {
        return Err(Error::UniquenessFailure(w));
    }
    if report.valid_decompositions != 1 {
        return Err(Error::UniquenessFailure(format!(
            "found {} canonical decompositions",
            report.valid_decompositions
        )));
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn search(
    n: &Matroid,
    full: ElemSet,
    candidates: &[ElemSet],
    from: usize,
    chosen: &mut Vec<ElemSet>,
    target: &[ElemSet],
    report: &mut UniquenessReport,
    failure: &mut Option<String>,
) -> Result<()> {
    report.split_families_checked += 1;
    let d = tree_from_splits(full, chosen);
    if is_canonical_shape(n, &d)? {
        report.valid_decompositions += 1;
        if canonical_family(chosen.clone()) != target && failure.is_none() {
            let show: Vec<Vec<String>> = chosen.iter().map(|s| n.labels(*s)).collect();
            *failure = Some(format!("another canonical decomposition has splits {show:?}"));
        }
    }
    for i in from..candidates.len() {
        let s = candidates[i];
        if chosen.iter().all(|&c| compatible(c, s, full)) {
            chosen.push(s);
            search(n, full, candidates, i + 1, chosen, target, report, failure)?;
            chosen.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FiniteGraph;

    fn two_triangles_sharing_an_edge() -> Matroid {
        FiniteGraph::new([
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("s", "1", "3"),
            ("c", "1", "4"),
            ("d", "4", "3"),
        ])
        .unwrap()
        .cycle_matroid()
    }

    #[test]
    fn single_node_torso_is_the_matroid() {
        let m = Matroid::uniform(2, ["a", "b", "c", "d"]).unwrap();
        assert_eq!(torso(&m, &TreeDecomposition::single(4), 0).unwrap(), m);
    }

    #[test]
    fn u34_split_gives_triangles() {
        let m = Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap();
        let d = TreeDecomposition {
            parts: vec![m.set_of(["a", "b"]).unwrap(), m.set_of(["c", "d"]).unwrap()],
            edges: vec![(0, 1)],
        };
        for v in 0..2 {
            let t = torso(&m, &d, v).unwrap();
            assert_eq!(t.len(), 3);
            assert!(t.is_uniform(2));
        }
        let tree = decomposition_tree(&m, &d).unwrap();
        assert_eq!(tree.glue().unwrap(), m);
        let p = circuit_precircuit(&m, &d, m.ground_set()).unwrap();
        assert_eq!(p.choices.len(), 2);
        assert_eq!(tree.underlying_set(&p).unwrap(), m.ground_set());
    }

    #[test]
    fn k4_and_u34_are_single_nodes() {
        let k4 = crate::ray::k4_matroid();
        let c = canonical_decompose(&k4).unwrap();
        assert_eq!(c.kinds, vec![Some(TorsoKind::ThreeConnected)]);
        let u = Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap();
        let c = canonical_decompose(&u).unwrap();
        assert_eq!(c.kinds, vec![Some(TorsoKind::Circuit)]);
        verify_canonical(&u, &c.decomposition).unwrap();
        verify_canonical(&k4, &canonical_decompose(&k4).unwrap().decomposition).unwrap();
    }

    #[test]
    fn two_triangles_decompose_into_a_path() {
        let m = two_triangles_sharing_an_edge();
        let c = canonical_decompose(&m).unwrap();
        assert_eq!(c.decomposition.node_count(), 3);
        let mut kinds = c.kinds.clone();
        kinds.sort();
        assert_eq!(
            kinds,
            vec![Some(TorsoKind::Circuit), Some(TorsoKind::Circuit), Some(TorsoKind::Cocircuit)]
        );
        let centre = c.kinds.iter().position(|k| *k == Some(TorsoKind::Cocircuit)).unwrap();
        assert_eq!(m.labels(c.decomposition.parts[centre]), ["s"]);
        assert!(c.torsos[centre].is_uniform(1));
        assert_eq!(c.decomposition.neighbours(centre).len(), 2);
        let r = verify_canonical(&m, &c.decomposition).unwrap();
        assert_eq!(r.valid_decompositions, 1);
        assert!(roundtrip(&m).unwrap().identity);
    }

    #[test]
    fn rejects_small_and_disconnected() {
        assert!(matches!(canonical_decompose(&Matroid::empty()), Err(Error::TooSmall(_))));
        let free = Matroid::uniform(2, ["a", "b"]).unwrap();
        assert!(matches!(canonical_decompose(&free), Err(Error::NotConnected)));
        let pair = Matroid::uniform(1, ["a", "b"]).unwrap();
        assert_eq!(canonical_decompose(&pair).unwrap().kinds, vec![None]);
    }

    #[test]
    fn dual_tree_matches_dual_decomposition() {
        let m = two_triangles_sharing_an_edge();
        let d = canonical_decompose(&m).unwrap().decomposition;
        let t = decomposition_tree(&m, &d).unwrap();
        assert_eq!(decomposition_tree(&m.dual(), &d).unwrap(), t.dual_tree());
    }

    #[test]
    fn long_circuit_stays_one_node() {
        let m = Matroid::uniform_n(5, 6).unwrap();
        let c = canonical_decompose(&m).unwrap();
        assert_eq!(c.decomposition.node_count(), 1);
        let r = verify_canonical(&m, &c.decomposition).unwrap();
        assert!(r.split_families_checked > 100);
    }
}
