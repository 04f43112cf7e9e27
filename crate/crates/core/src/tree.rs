//! Finite trees of matroids of overlap 1: precircuits, gluing, duals, minors.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{canonical_family, minimal_members, ElemSet, MAX_ELEMENTS};
use crate::two_sum::{two_sum, SharedEdgeWitness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub id: String,
    pub matroid: Matroid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub dummy: String,
}

/// A finite tree whose nodes carry matroids; adjacent nodes share exactly
/// their dummy element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidTree {
    nodes: Vec<TreeNode>,
    edges: Vec<TreeEdge>,
}

/// Partition of all node elements into real elements and dummies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundView {
    pub real: Vec<String>,
    pub dummies: Vec<String>,
}

/// A connected subtree with one circuit per node, given as
/// `(node index, circuit in that node's indexing)` sorted by node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Precircuit {
    pub choices: Vec<(usize, ElemSet)>,
}

impl Precircuit {
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.choices.iter().map(|(v, _)| *v)
    }

    pub fn choice(&self, node: usize) -> Option<ElemSet> {
        self.choices.iter().find(|(v, _)| *v == node).map(|(_, o)| *o)
    }
}

/// Outcome of the pairwise intersection scan between precircuits of a tree
/// and of its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeverMeetOnceReport {
    pub precircuit_supports: usize,
    pub precocircuit_supports: usize,
    pub pairs_checked: usize,
    pub max_intersection: usize,
}

// (child, dummy local to the parent, dummy local to the child)
type Children = Vec<Vec<(usize, usize, usize)>>;
type Partial = Vec<(usize, ElemSet)>;
type GrowMemo = BTreeMap<(usize, bool), Vec<Partial>>;

/// Index data shared by all tree computations: one global universe of
/// labels and per-node translations into it.
#[derive(Debug, Clone)]
pub(crate) struct Prepared {
    pub universe: Vec<String>,
    pub real: ElemSet,
    pub node_maps: Vec<Vec<usize>>,
    // per node: (neighbour, dummy index in the node's own ground)
    pub neighbours: Vec<Vec<(usize, usize)>>,
}

impl Prepared {
    pub fn lift(&self, node: usize, local: ElemSet) -> ElemSet {
        local.iter().map(|i| self.node_maps[node][i]).collect()
    }

    /// Global index set restricted to real elements, in real-ground indexing.
    pub fn to_real(&self, global: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for (k, i) in self.real.iter().enumerate() {
            if global.contains(i) {
                out = out.with(k);
            }
        }
        out
    }

    pub fn real_labels(&self) -> Vec<String> {
        self.real.iter().map(|i| self.universe[i].clone()).collect()
    }
}

impl MatroidTree {
    /// Builds a tree from `(id, matroid)` nodes and `(id, id, dummy)` edges.
    /// Only the identifiers are checked here; see [`MatroidTree::validate`].
    pub fn new(nodes: Vec<(String, Matroid)>, edges: Vec<(String, String, String)>) -> Result<MatroidTree> {
        let mut ids = BTreeMap::new();
        for (i, (id, _)) in nodes.iter().enumerate() {
            if ids.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateElement(id.clone()));
            }
        }
        let lookup = |id: &str| ids.get(id).copied().ok_or_else(|| Error::UnknownElement(id.to_string()));
        let edges = edges
            .into_iter()
            .map(|(a, b, dummy)| {
                Ok(TreeEdge {
                    a: lookup(&a)?,
                    b: lookup(&b)?,
                    dummy,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let nodes = nodes
            .into_iter()
            .map(|(id, matroid)| TreeNode { id, matroid })
            .collect();
        Ok(MatroidTree { nodes, edges })
    }

    /// A single-node tree.
    pub fn single(id: &str, m: Matroid) -> MatroidTree {
        MatroidTree {
            nodes: vec![TreeNode {
                id: id.to_string(),
                matroid: m,
            }],
            edges: Vec::new(),
        }
    }

    /// A path `parts[0] - parts[1] - ...` joined by `shared[i]`.
    pub fn path(parts: &[Matroid], shared: &[String]) -> Result<MatroidTree> {
        if parts.len() != shared.len() + 1 {
            return Err(Error::PreconditionViolated("path needs one dummy per edge".into()));
        }
        let nodes = parts
            .iter()
            .enumerate()
            .map(|(i, m)| (format!("t{i}"), m.clone()))
            .collect();
        let edges = shared
            .iter()
            .enumerate()
            .map(|(i, d)| (format!("t{i}"), format!("t{}", i + 1), d.clone()))
            .collect();
        MatroidTree::new(nodes, edges)
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    /// Checks the tree shape and the overlap-1 condition, and splits the
    /// elements into real ones and dummies.
    pub fn validate(&self) -> Result<GroundView> {
        let p = self.prepare()?;
        let real = p.real_labels();
        let dummies = self.edges.iter().map(|e| e.dummy.clone()).collect::<BTreeSet<_>>();
        Ok(GroundView {
            real,
            dummies: dummies.into_iter().collect(),
        })
    }

    pub(crate) fn prepare(&self) -> Result<Prepared> {
        let n = self.nodes.len();
        if n == 0 {
            return Err(Error::NotATree("no nodes".into()));
        }
        if self.edges.len() != n - 1 {
            return Err(Error::NotATree(format!("{} nodes but {} edges", n, self.edges.len())));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (ra, rb) = (root(&mut parent, e.a), root(&mut parent, e.b));
            if ra == rb {
                return Err(Error::NotATree(format!(
                    "edge {}-{} closes a cycle",
                    self.nodes[e.a].id, self.nodes[e.b].id
                )));
            }
            parent[ra] = rb;
        }
        let mut seen_dummies = BTreeSet::new();
        for e in &self.edges {
            if !seen_dummies.insert(e.dummy.as_str())
                || !self.nodes[e.a].matroid.contains_label(&e.dummy)
                || !self.nodes[e.b].matroid.contains_label(&e.dummy)
            {
                return Err(Error::StrayDummy(e.dummy.clone()));
            }
            for (k, node) in self.nodes.iter().enumerate() {
                if k != e.a && k != e.b && node.matroid.contains_label(&e.dummy) {
                    return Err(Error::StrayDummy(e.dummy.clone()));
                }
            }
        }
        let edge_between: BTreeMap<(usize, usize), &str> = self
            .edges
            .iter()
            .map(|e| ((e.a.min(e.b), e.a.max(e.b)), e.dummy.as_str()))
            .collect();
        for s in 0..n {
            let gs: BTreeSet<&str> = self.nodes[s].matroid.ground().iter().map(String::as_str).collect();
            for t in s + 1..n {
                let common: Vec<&str> = self.nodes[t]
                    .matroid
                    .ground()
                    .iter()
                    .map(String::as_str)
                    .filter(|l| gs.contains(l))
                    .collect();
                if common.is_empty() {
                    continue;
                }
                let reason = match edge_between.get(&(s, t)) {
                    None => format!("non-adjacent nodes share {common:?}"),
                    Some(d) if common != [*d] => format!("shared elements {common:?} differ from dummy `{d}`"),
                    Some(_) => continue,
                };
                return Err(Error::OverlapViolation(
                    self.nodes[s].id.clone(),
                    self.nodes[t].id.clone(),
                    reason,
                ));
            }
        }
        let universe: Vec<String> = self
            .nodes
            .iter()
            .flat_map(|t| t.matroid.ground().iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if universe.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(universe.len()));
        }
        let index: BTreeMap<&str, usize> = universe.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let node_maps: Vec<Vec<usize>> = self
            .nodes
            .iter()
            .map(|t| t.matroid.ground().iter().map(|l| index[l.as_str()]).collect())
            .collect();
        let dummies: ElemSet = self.edges.iter().map(|e| index[e.dummy.as_str()]).collect();
        let mut neighbours = vec![Vec::new(); n];
        for e in &self.edges {
            neighbours[e.a].push((e.b, self.nodes[e.a].matroid.index_of(&e.dummy)?));
            neighbours[e.b].push((e.a, self.nodes[e.b].matroid.index_of(&e.dummy)?));
        }
        Ok(Prepared {
            real: ElemSet::full(universe.len()).difference(dummies),
            universe,
            node_maps,
            neighbours,
        })
    }

    /// The real elements covered by a precircuit, indexed by the real ground.
    pub fn underlying_set(&self, p: &Precircuit) -> Result<ElemSet> {
        let prep = self.prepare()?;
        self.check_precircuit(&prep, p)?;
        let global = p
            .choices
            .iter()
            .fold(ElemSet::EMPTY, |acc, &(v, o)| acc.union(prep.lift(v, o)));
        Ok(prep.to_real(global))
    }

    fn check_precircuit(&self, prep: &Prepared, p: &Precircuit) -> Result<()> {
        let members: BTreeSet<usize> = p.nodes().collect();
        if members.is_empty() || members.len() != p.choices.len() {
            return Err(Error::InconsistentPrecircuit("empty or repeated node".into()));
        }
        for &(v, o) in &p.choices {
            let id = || self.nodes.get(v).map(|t| t.id.clone()).unwrap_or_else(|| v.to_string());
            if v >= self.nodes.len() || !self.nodes[v].matroid.is_circuit(o) {
                return Err(Error::InconsistentPrecircuit(format!("node {}: choice is not a circuit", id())));
            }
            for &(w, d) in &prep.neighbours[v] {
                if o.contains(d) != members.contains(&w) {
                    return Err(Error::InconsistentPrecircuit(format!(
                        "node {}: dummy `{}` toward {}",
                        id(),
                        self.nodes[v].matroid.label(d),
                        self.nodes[w].id
                    )));
                }
            }
        }
        // consistency with at least one member forces connectivity
        Ok(())
    }

    /// Whether some edge of the precircuit's subtree has a side whose
    /// choices contain no real element.
    pub fn is_phantom(&self, p: &Precircuit) -> Result<bool> {
        let prep = self.prepare()?;
        self.check_precircuit(&prep, p)?;
        let members: BTreeSet<usize> = p.nodes().collect();
        let real_free = |side: &BTreeSet<usize>| {
            side.iter()
                .all(|&v| prep.lift(v, p.choice(v).unwrap()).is_disjoint(prep.real))
        };
        for e in &self.edges {
            if !members.contains(&e.a) || !members.contains(&e.b) {
                continue;
            }
            let mut side = BTreeSet::from([e.b]);
            let mut stack = vec![e.b];
            while let Some(v) = stack.pop() {
                for &(w, _) in &prep.neighbours[v] {
                    if w != e.a && members.contains(&w) && side.insert(w) {
                        stack.push(w);
                    }
                }
            }
            let other: BTreeSet<usize> = members.difference(&side).copied().collect();
            if real_free(&side) || real_free(&other) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Children lists for the tree rooted at node 0, with the dummy (local to
    /// the parent) and the dummy local to the child.
    fn rooted(&self, prep: &Prepared) -> (Children, Vec<Option<usize>>) {
        let n = self.nodes.len();
        let mut children = vec![Vec::new(); n];
        let mut parent_dummy = vec![None; n];
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, d) in &prep.neighbours[v] {
                if !seen[w] {
                    seen[w] = true;
                    let back = prep.neighbours[w].iter().find(|(x, _)| *x == v).unwrap().1;
                    children[v].push((w, d, back));
                    parent_dummy[w] = Some(back);
                    stack.push(w);
                }
            }
        }
        (children, parent_dummy)
    }

    /// All precircuits, ordered by their choice lists.
    pub fn precircuits(&self) -> Result<Vec<Precircuit>> {
        let prep = self.prepare()?;
        let (children, parent_dummy) = self.rooted(&prep);
        let mut memo: GrowMemo = BTreeMap::new();
        let mut out = Vec::new();
        for v in 0..self.nodes.len() {
            for mut choices in self.grow(v, false, &children, &parent_dummy, &mut memo) {
                choices.sort();
                out.push(Precircuit { choices });
            }
        }
        out.sort();
        Ok(out)
    }

    fn grow(
        &self,
        v: usize,
        with_parent: bool,
        children: &[Vec<(usize, usize, usize)>],
        parent_dummy: &[Option<usize>],
        memo: &mut GrowMemo,
    ) -> Vec<Partial> {
        if let Some(r) = memo.get(&(v, with_parent)) {
            return r.clone();
        }
        let mut result = Vec::new();
        for &o in self.nodes[v].matroid.circuits() {
            let has_parent = parent_dummy[v].is_some_and(|d| o.contains(d));
            if has_parent != with_parent {
                continue;
            }
            let mut partial = vec![vec![(v, o)]];
            for &(c, d, _) in &children[v] {
                if !o.contains(d) {
                    continue;
                }
                let sub = self.grow(c, true, children, parent_dummy, memo);
                partial = partial
                    .iter()
                    .flat_map(|p| {
                        sub.iter().map(move |s| {
                            let mut q = p.clone();
                            q.extend_from_slice(s);
                            q
                        })
                    })
                    .collect();
            }
            result.extend(partial);
        }
        memo.insert((v, with_parent), result.clone());
        result
    }

    /// Distinct unions of precircuit choices, as global index sets.
    pub(crate) fn precircuit_unions(&self, prep: &Prepared) -> Vec<ElemSet> {
        let (children, parent_dummy) = self.rooted(prep);
        let mut memo = BTreeMap::new();
        let mut out = BTreeSet::new();
        for v in 0..self.nodes.len() {
            out.extend(self.grow_unions(prep, v, false, &children, &parent_dummy, &mut memo));
        }
        out.into_iter().collect()
    }

    fn grow_unions(
        &self,
        prep: &Prepared,
        v: usize,
        with_parent: bool,
        children: &[Vec<(usize, usize, usize)>],
        parent_dummy: &[Option<usize>],
        memo: &mut BTreeMap<(usize, bool), Vec<ElemSet>>,
    ) -> Vec<ElemSet> {
        if let Some(r) = memo.get(&(v, with_parent)) {
            return r.clone();
        }
        let mut result = BTreeSet::new();
        for &o in self.nodes[v].matroid.circuits() {
            let has_parent = parent_dummy[v].is_some_and(|d| o.contains(d));
            if has_parent != with_parent {
                continue;
            }
            let mut partial: BTreeSet<ElemSet> = BTreeSet::from([prep.lift(v, o)]);
            for &(c, d, _) in &children[v] {
                if !o.contains(d) {
                    continue;
                }
                let sub = self.grow_unions(prep, c, true, children, parent_dummy, memo);
                partial = partial
                    .iter()
                    .flat_map(|p| sub.iter().map(move |s| p.union(*s)))
                    .collect();
            }
            result.extend(partial);
        }
        let result: Vec<ElemSet> = result.into_iter().collect();
        memo.insert((v, with_parent), result.clone());
        result
    }

    /// Distinct underlying sets of all precircuits (possibly empty), in the
    /// real-ground indexing, canonical order.
    pub fn underlying_sets(&self) -> Result<Vec<ElemSet>> {
        let prep = self.prepare()?;
        let sets = self
            .precircuit_unions(&prep)
            .into_iter()
            .map(|u| prep.to_real(u))
            .collect();
        Ok(canonical_family(sets))
    }

    /// Minimal nonempty underlying sets: the circuits of the glued matroid.
    pub fn enumerate_circuits(&self) -> Result<Vec<ElemSet>> {
        Ok(minimal_members(self.underlying_sets()?))
    }

    /// The matroid on the real elements whose circuits are the minimal
    /// nonempty underlying sets of precircuits.
    pub fn glue(&self) -> Result<Matroid> {
        let view = self.validate()?;
        let circuits = self.enumerate_circuits()?;
        Matroid::from_sets(view.real, circuits).map_err(|e| Error::NotAMatroid(Box::new(e)))
    }

    /// Glues by iterated 2-sums along `order`, which must list every node
    /// after some neighbour (except the first).
    pub fn glue_by_two_sums(&self, order: &[usize]) -> Result<Matroid> {
        let prep = self.prepare()?;
        if order.len() != self.nodes.len() || order.iter().collect::<BTreeSet<_>>().len() != order.len() {
            return Err(Error::PreconditionViolated("order must list every node once".into()));
        }
        let mut placed = BTreeSet::from([order[0]]);
        let mut acc = self.nodes[order[0]].matroid.clone();
        for &v in &order[1..] {
            let &(_, d) = prep.neighbours[v]
                .iter()
                .find(|(w, _)| placed.contains(w))
                .ok_or_else(|| Error::PreconditionViolated("order is not a traversal".into()))?;
            let dummy = self.nodes[v].matroid.label(d).to_string();
            acc = two_sum(&SharedEdgeWitness::new(&acc, &self.nodes[v].matroid, &dummy))?;
            placed.insert(v);
        }
        Ok(acc)
    }

    /// Depth-first preorder from node 0, visiting neighbours in edge order.
    pub fn dfs_order(&self) -> Result<Vec<usize>> {
        let prep = self.prepare()?;
        let mut order = Vec::new();
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            order.push(v);
            for &(w, _) in prep.neighbours[v].iter().rev() {
                if !seen[w] {
                    stack.push(w);
                }
            }
        }
        Ok(order)
    }

    /// Nodewise dual.
    pub fn dual_tree(&self) -> MatroidTree {
        MatroidTree {
            nodes: self
                .nodes
                .iter()
                .map(|t| TreeNode {
                    id: t.id.clone(),
                    matroid: t.matroid.dual(),
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// Nodewise minor by real elements.
    pub fn tree_minor<S: AsRef<str>>(
        &self,
        contract: impl IntoIterator<Item = S>,
        delete: impl IntoIterator<Item = S>,
    ) -> Result<MatroidTree> {
        let view = self.validate()?;
        let collect = |it: &mut dyn Iterator<Item = String>| -> Result<BTreeSet<String>> {
            let mut s = BTreeSet::new();
            for l in it {
                if view.dummies.binary_search(&l).is_ok() {
                    return Err(Error::DummyTouched(l));
                }
                if view.real.binary_search(&l).is_err() {
                    return Err(Error::UnknownElement(l));
                }
                s.insert(l);
            }
            Ok(s)
        };
        let c = collect(&mut contract.into_iter().map(|l| l.as_ref().to_string()))?;
        let d = collect(&mut delete.into_iter().map(|l| l.as_ref().to_string()))?;
        let overlap: Vec<String> = c.intersection(&d).cloned().collect();
        if !overlap.is_empty() {
            return Err(Error::OverlappingSets(overlap));
        }
        let mut nodes = Vec::new();
        for t in &self.nodes {
            let m = &t.matroid;
            let local = |s: &BTreeSet<String>| m.set_of(s.iter().filter(|l| m.contains_label(l)));
            nodes.push(TreeNode {
                id: t.id.clone(),
                matroid: m.minor(local(&c)?, local(&d)?)?,
            });
        }
        Ok(MatroidTree {
            nodes,
            edges: self.edges.clone(),
        })
    }

    /// Checks that no underlying set of a precircuit meets an underlying set
    /// of a precircuit of the dual tree in exactly one element.
    pub fn check_never_meet_once(&self) -> Result<NeverMeetOnceReport> {
        let circuits = self.underlying_sets()?;
        let cocircuits = self.dual_tree().underlying_sets()?;
        let real = self.validate()?.real;
        let mut max_intersection = 0;
        for &a in &circuits {
            for &b in &cocircuits {
                let k = a.intersection(b).len();
                if k == 1 {
                    let show = |s: ElemSet| s.iter().map(|i| real[i].clone()).collect::<Vec<_>>().join(" ");
                    return Err(Error::LemmaViolation(format!(
                        "precircuit {{{}}} meets precocircuit {{{}}} once",
                        show(a),
                        show(b)
                    )));
                }
                max_intersection = max_intersection.max(k);
            }
        }
        Ok(NeverMeetOnceReport {
            precircuit_supports: circuits.len(),
            precocircuit_supports: cocircuits.len(),
            pairs_checked: circuits.len() * cocircuits.len(),
            max_intersection,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(labels: [&str; 3]) -> Matroid {
        Matroid::uniform(2, labels).unwrap()
    }

    fn two_triangles() -> MatroidTree {
        MatroidTree::path(&[tri(["a", "b", "e"]), tri(["c", "d", "e"])], &["e".into()]).unwrap()
    }

    #[test]
    fn validate_splits_real_and_dummy() {
        let v = two_triangles().validate().unwrap();
        assert_eq!(v.real, ["a", "b", "c", "d"]);
        assert_eq!(v.dummies, ["e"]);
        let single = MatroidTree::single("x", tri(["a", "b", "c"]));
        assert_eq!(single.validate().unwrap().real, ["a", "b", "c"]);
    }

    #[test]
    fn overlap_two_is_rejected() {
        let t = MatroidTree::path(&[tri(["a", "b", "e"]), tri(["a", "d", "e"])], &["e".into()]).unwrap();
        assert!(matches!(t.validate(), Err(Error::OverlapViolation(..))));
        let t = MatroidTree::path(&[tri(["a", "b", "c"]), tri(["x", "d", "e"])], &["e".into()]).unwrap();
        assert!(matches!(t.validate(), Err(Error::StrayDummy(_))));
    }

    #[test]
    fn glue_two_triangles() {
        let t = two_triangles();
        assert_eq!(t.glue().unwrap(), Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap());
        let p = Precircuit {
            choices: vec![(0, ElemSet::full(3)), (1, ElemSet::full(3))],
        };
        assert_eq!(t.underlying_set(&p).unwrap(), ElemSet::full(4));
        let bad = Precircuit {
            choices: vec![(0, ElemSet::full(3))],
        };
        assert!(matches!(t.underlying_set(&bad), Err(Error::InconsistentPrecircuit(_))));
    }

    #[test]
    fn precircuits_of_two_triangles() {
        // {a,b,e}+{c,d,e} is the only precircuit: every circuit holds the dummy
        let ps = two_triangles().precircuits().unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].choices.len(), 2);
    }

    #[test]
    fn star_matches_two_sums() {
        let center = tri(["x", "y", "z"]);
        let t = MatroidTree::new(
            vec![
                ("c".into(), center),
                ("p".into(), tri(["a", "b", "x"])),
                ("q".into(), tri(["c", "d", "y"])),
                ("r".into(), tri(["e", "f", "z"])),
            ],
            vec![
                ("c".into(), "p".into(), "x".into()),
                ("c".into(), "q".into(), "y".into()),
                ("c".into(), "r".into(), "z".into()),
            ],
        )
        .unwrap();
        let g = t.glue().unwrap();
        assert_eq!(g, t.glue_by_two_sums(&t.dfs_order().unwrap()).unwrap());
        assert_eq!(g, Matroid::uniform(5, ["a", "b", "c", "d", "e", "f"]).unwrap());
    }

    #[test]
    fn dual_and_minor_commute_with_glue() {
        let t = MatroidTree::path(
            &[Matroid::uniform(2, ["a", "b", "c", "e"]).unwrap(), tri(["e", "x", "y"])],
            &["e".into()],
        )
        .unwrap();
        let g = t.glue().unwrap();
        assert_eq!(t.dual_tree().glue().unwrap(), g.dual());
        assert_eq!(t.dual_tree().dual_tree(), t);
        let m = t.tree_minor(["a"], []).unwrap().glue().unwrap();
        assert_eq!(m, g.minor_by_labels(["a"], []).unwrap());
        assert!(matches!(t.tree_minor(["e"], []), Err(Error::DummyTouched(_))));
    }

    #[test]
    fn never_meet_once_on_paths() {
        let r = two_triangles().check_never_meet_once().unwrap();
        assert_eq!(r.precircuit_supports, 1);
        assert!(r.max_intersection >= 2);
        let three = MatroidTree::path(
            &[tri(["a", "b", "x"]), tri(["x", "c", "y"]), tri(["y", "d", "f"])],
            &["x".into(), "y".into()],
        )
        .unwrap();
        three.check_never_meet_once().unwrap();
    }

    #[test]
    fn phantom_when_a_side_is_real_free() {
        let t = two_triangles();
        let ps = t.precircuits().unwrap();
        assert!(!t.is_phantom(&ps[0]).unwrap());
        let par = Matroid::from_circuits(["d", "g"], [["d", "g"]]).unwrap();
        let looped = Matroid::from_circuits(["d", "x"], [["d"]]).unwrap();
        let t = MatroidTree::new(
            vec![("p".into(), looped), ("q".into(), par)],
            vec![("p".into(), "q".into(), "d".into())],
        )
        .unwrap();
        let phantom = t
            .precircuits()
            .unwrap()
            .into_iter()
            .find(|p| p.choices.len() == 2)
            .unwrap();
        assert!(t.is_phantom(&phantom).unwrap());
    }

    #[test]
    fn empty_real_ground_glues_to_empty_matroid() {
        let loopy = Matroid::from_circuits(["d"], [["d"]]).unwrap();
        let t = MatroidTree::path(&[loopy.clone(), loopy], &["d".into()]).unwrap();
        assert_eq!(t.glue().unwrap(), Matroid::empty());
    }
}
