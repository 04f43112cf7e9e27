//! Finite multigraphs: cycle matroids, bonds, shortcut paths around circles
//! and rerouting of circuits along such paths.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{canonical_family, ElemSet, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// A finite multigraph with labelled edges. Edges are kept sorted by label so
/// that edge indices coincide with the ground indices of [`FiniteGraph::cycle_matroid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    // (edge index, neighbour) per vertex, loops excluded
    adjacency: Vec<Vec<(usize, usize)>>,
}

/// A path given as its vertex sequence and the edges between consecutive vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl GraphPath {
    pub fn trivial(v: usize) -> Self {
        GraphPath {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn edge_set(&self) -> ElemSet {
        self.edges.iter().copied().collect()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("nonempty path")
    }
}

/// A circle with two marked vertices and a choice of orientation. The arc
/// `v → w` runs along the circle in the chosen direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedArcSpec {
    pub circle: ElemSet,
    pub v: usize,
    pub w: usize,
    pub forward: bool,
}

/// Output of [`FiniteGraph::shortcut_path`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortcut {
    pub path: GraphPath,
    /// Present when the arc has at least two edges.
    pub bond: Option<Bond>,
}

/// A bond together with the vertex side that does not contain the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bond {
    pub edges: ElemSet,
    pub inner_side: ElemSet,
}

/// A circle walked in one direction: `edges[i]` joins `vertices[i]` to
/// `vertices[i + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl CircleWalk {
    fn reversed(&self) -> CircleWalk {
        let n = self.vertices.len();
        let vertices = (0..n).map(|i| self.vertices[(n - i) % n]).collect();
        let edges = (0..n).map(|i| self.edges[(2 * n - 1 - i) % n]).collect();
        CircleWalk { vertices, edges }
    }

    fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Arc from `v` to `w` along the walk; the whole circle when `v == w`.
    pub fn arc(&self, v: usize, w: usize) -> Option<GraphPath> {
        let n = self.vertices.len();
        let start = self.position(v)?;
        self.position(w)?;
        let mut vertices = vec![v];
        let mut edges = Vec::new();
        let mut i = start;
        loop {
            edges.push(self.edges[i]);
            i = (i + 1) % n;
            vertices.push(self.vertices[i]);
            if self.vertices[i] == w {
                break;
            }
        }
        Some(GraphPath { vertices, edges })
    }
}

fn union_find_root(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

impl FiniteGraph {
    /// Builds a graph from `(label, u, v)` triples.
    pub fn new<S: AsRef<str>>(edges: impl IntoIterator<Item = (S, S, S)>) -> Result<FiniteGraph> {
        Self::with_vertices(std::iter::empty::<&str>(), edges)
    }

    /// Like [`FiniteGraph::new`] but also registers isolated vertices.
    pub fn with_vertices<S: AsRef<str>, T: AsRef<str>>(
        vertices: impl IntoIterator<Item = T>,
        edges: impl IntoIterator<Item = (S, S, S)>,
    ) -> Result<FiniteGraph> {
        let raw: Vec<(String, String, String)> = edges
            .into_iter()
            .map(|(l, u, v)| (l.as_ref().to_string(), u.as_ref().to_string(), v.as_ref().to_string()))
            .collect();
        let mut vset: BTreeSet<String> = vertices.into_iter().map(|v| v.as_ref().to_string()).collect();
        let mut labels = BTreeSet::new();
        for (l, u, v) in &raw {
            if !labels.insert(l.clone()) {
                return Err(Error::DuplicateElement(l.clone()));
            }
            vset.insert(u.clone());
            vset.insert(v.clone());
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(labels.len()));
        }
        if vset.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(vset.len()));
        }
        let vertices: Vec<String> = vset.into_iter().collect();
        let vindex: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edges: Vec<Edge> = raw
            .iter()
            .map(|(l, u, v)| Edge {
                label: l.clone(),
                u: vindex[u.as_str()],
                v: vindex[v.as_str()],
            })
            .collect();
        edges.sort_by(|a, b| a.label.cmp(&b.label));
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            if !e.is_loop() {
                adjacency[e.u].push((i, e.v));
                adjacency[e.v].push((i, e.u));
            }
        }
        Ok(FiniteGraph {
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .map_err(|_| Error::UnknownElement(name.to_string()))
    }

    /// `(edge index, neighbour)` pairs at `v`, loops excluded.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.edges
            .binary_search_by(|e| e.label.as_str().cmp(label))
            .map_err(|_| Error::UnknownElement(label.to_string()))
    }

    pub fn edge_set<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<ElemSet> {
        labels
            .into_iter()
            .map(|l| self.edge_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }

    pub fn edge_labels(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.edges[i].label.clone()).collect()
    }

    pub fn vertex_names(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn all_vertices(&self) -> ElemSet {
        ElemSet::full(self.vertices.len())
    }

    pub fn all_edges(&self) -> ElemSet {
        ElemSet::full(self.edges.len())
    }

    /// Vertices incident with some edge of `edges`.
    pub fn vertices_of(&self, edges: ElemSet) -> ElemSet {
        edges
            .iter()
            .fold(ElemSet::EMPTY, |s, i| s.with(self.edges[i].u).with(self.edges[i].v))
    }

    /// Edges with one end in `side` and the other outside it.
    pub fn cut(&self, side: ElemSet) -> ElemSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| side.contains(e.u) != side.contains(e.v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether the subgraph induced on `verts` is connected (true when empty).
    pub fn induced_connected(&self, verts: ElemSet) -> bool {
        let Some(start) = verts.first() else {
            return true;
        };
        self.reach(start, verts, ElemSet::EMPTY) == verts
    }

    /// Vertices reachable from `start` inside `allowed`, never using `banned_edges`.
    fn reach(&self, start: usize, allowed: ElemSet, banned_edges: ElemSet) -> ElemSet {
        let mut seen = ElemSet::singleton(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(e, y) in &self.adjacency[x] {
                if allowed.contains(y) && !seen.contains(y) && !banned_edges.contains(e) {
                    seen = seen.with(y);
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Vertex sets of the connected components, in canonical order.
    pub fn components(&self) -> Vec<ElemSet> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for e in &self.edges {
            let a = union_find_root(&mut parent, e.u);
            let b = union_find_root(&mut parent, e.v);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: BTreeMap<usize, ElemSet> = BTreeMap::new();
        for v in 0..n {
            let r = union_find_root(&mut parent, v);
            let slot = comps.entry(r).or_default();
            *slot = slot.with(v);
        }
        canonical_family(comps.into_values().collect())
    }

    /// Edge sets of all cycles (loops give singletons, parallel pairs give
    /// 2-cycles), in canonical order.
    pub fn cycles(&self) -> Vec<ElemSet> {
        let mut found = BTreeSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                found.insert(ElemSet::singleton(i));
            }
        }
        let n = self.vertices.len();
        let mut on_path = vec![false; n];
        for s in 0..n {
            on_path[s] = true;
            self.extend_cycles(s, s, ElemSet::EMPTY, &mut on_path, &mut found);
            on_path[s] = false;
        }
        canonical_family(found.into_iter().collect())
    }

    fn extend_cycles(
        &self,
        start: usize,
        cur: usize,
        used: ElemSet,
        on_path: &mut [bool],
        found: &mut BTreeSet<ElemSet>,
    ) {
        for &(e, y) in &self.adjacency[cur] {
            if used.contains(e) {
                continue;
            }
            if y == start {
                if !used.is_empty() {
                    found.insert(used.with(e));
                }
            } else if y > start && !on_path[y] {
                on_path[y] = true;
                self.extend_cycles(start, y, used.with(e), on_path, found);
                on_path[y] = false;
            }
        }
    }

    /// Edge sets of all bonds (minimal nonempty cuts), in canonical order.
    pub fn bonds(&self) -> Vec<ElemSet> {
        let mut found = BTreeSet::new();
        for comp in self.components() {
            if comp.len() < 2 {
                continue;
            }
            let first = comp.first().expect("nonempty");
            for s in comp.without(first).subsets() {
                let side = s.with(first);
                if side == comp {
                    continue;
                }
                let other = comp.difference(side);
                if self.induced_connected(side) && self.induced_connected(other) {
                    found.insert(self.cut(side));
                }
            }
        }
        canonical_family(found.into_iter().collect())
    }

    /// The cycle matroid on the edge labels.
    pub fn cycle_matroid(&self) -> Matroid {
        let ground = self.edges.iter().map(|e| e.label.clone()).collect();
        Matroid::from_sets_unchecked(ground, self.cycles()).expect("edge count checked")
    }

    /// Whether `edges` is the edge set of a cycle.
    pub fn is_cycle(&self, edges: ElemSet) -> bool {
        if edges.is_empty() {
            return false;
        }
        if edges.len() == 1 {
            return self.edges[edges.first().unwrap()].is_loop();
        }
        if edges.iter().any(|i| self.edges[i].is_loop()) {
            return false;
        }
        let verts = self.vertices_of(edges);
        let degree_ok = verts.iter().all(|v| {
            edges
                .iter()
                .filter(|&i| self.edges[i].u == v || self.edges[i].v == v)
                .count()
                == 2
        });
        degree_ok && self.edge_connected(edges)
    }

    fn edge_connected(&self, edges: ElemSet) -> bool {
        let verts = self.vertices_of(edges);
        let Some(start) = verts.first() else {
            return true;
        };
        let banned = self.all_edges().difference(edges);
        self.reach(start, verts, banned) == verts
    }

    /// Whether `edges` is a bond.
    pub fn is_bond(&self, edges: ElemSet) -> bool {
        if edges.is_empty() {
            return false;
        }
        let e = &self.edges[edges.first().unwrap()];
        if e.is_loop() {
            return false;
        }
        let comp = self
            .components()
            .into_iter()
            .find(|c| c.contains(e.u))
            .expect("vertex has a component");
        let side = self.reach(e.u, comp, edges);
        !side.contains(e.v)
            && self.cut(side) == edges
            && self.induced_connected(comp.difference(side))
    }

    /// Walks the circle `circle` in its canonical direction: from its least
    /// vertex along its least incident circle edge.
    pub fn circle_walk(&self, circle: ElemSet) -> Result<CircleWalk> {
        if !self.is_cycle(circle) {
            return Err(Error::PreconditionViolated(format!(
                "{:?} is not a cycle",
                self.edge_labels(circle)
            )));
        }
        if circle.len() == 1 {
            let e = circle.first().unwrap();
            return Ok(CircleWalk {
                vertices: vec![self.edges[e].u],
                edges: vec![e],
            });
        }
        let start = self.vertices_of(circle).first().unwrap();
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut cur = start;
        let mut remaining = circle;
        loop {
            let e = remaining
                .iter()
                .find(|&i| self.edges[i].u == cur || self.edges[i].v == cur)
                .expect("cycle continues");
            remaining = remaining.without(e);
            edges.push(e);
            cur = self.edges[e].other(cur);
            if cur == start {
                break;
            }
            vertices.push(cur);
        }
        Ok(CircleWalk { vertices, edges })
    }

    fn oriented_walk(&self, spec: &OrientedArcSpec) -> Result<CircleWalk> {
        let walk = self.circle_walk(spec.circle)?;
        Ok(if spec.forward { walk } else { walk.reversed() })
    }

    /// The arc `v → w` of an oriented circle.
    pub fn arc(&self, spec: &OrientedArcSpec) -> Result<GraphPath> {
        self.oriented_walk(spec)?
            .arc(spec.v, spec.w)
            .ok_or_else(|| Error::PreconditionViolated("arc endpoints must lie on the circle".into()))
    }

    /// Finds a `v`–`w` path that avoids `avoid` and the interior of the arc
    /// `v → w`. When the arc has at least two edges, also returns a bond with
    /// the path and the opposite arc on one side and the interior vertices of
    /// the arc on the other.
    pub fn shortcut_path(&self, spec: &OrientedArcSpec, avoid: ElemSet) -> Result<Shortcut> {
        let walk = self.oriented_walk(spec)?;
        let circle_vertices: ElemSet = walk.vertices.iter().copied().collect();
        if !circle_vertices.contains(spec.v) || !circle_vertices.contains(spec.w) {
            return Err(Error::PreconditionViolated(
                "arc endpoints must lie on the circle".into(),
            ));
        }
        if !avoid.is_disjoint(circle_vertices) {
            return Err(Error::PreconditionViolated(
                "avoided vertices must miss the circle".into(),
            ));
        }
        if spec.v == spec.w {
            return Ok(Shortcut {
                path: GraphPath::trivial(spec.v),
                bond: None,
            });
        }
        let arc = walk.arc(spec.v, spec.w).expect("endpoints on circle");
        if arc.edges.len() == 1 {
            return Ok(Shortcut {
                path: arc,
                bond: None,
            });
        }
        let interior: ElemSet = arc.vertices[1..arc.vertices.len() - 1].iter().copied().collect();
        let allowed = self.all_vertices().difference(avoid).difference(interior);
        let path = self
            .shortest_path(spec.v, spec.w, allowed, arc.edge_set())
            .ok_or_else(|| Error::NoPath(format!(
                "no path from {} to {} outside the arc",
                self.vertices[spec.v], self.vertices[spec.w]
            )))?;
        let opposite = walk.arc(spec.w, spec.v).expect("endpoints on circle");
        let outer: ElemSet = path
            .vertices
            .iter()
            .chain(opposite.vertices.iter())
            .copied()
            .collect();
        let inner_start = interior.first().expect("arc has an interior vertex");
        let inner_side = self.reach(inner_start, self.all_vertices().difference(outer), ElemSet::EMPTY);
        let bond = Bond {
            edges: self.cut(inner_side),
            inner_side,
        };
        Ok(Shortcut {
            path,
            bond: Some(bond),
        })
    }

    /// Breadth-first shortest path, exploring edges in label order.
    pub fn shortest_path(
        &self,
        from: usize,
        to: usize,
        allowed: ElemSet,
        banned_edges: ElemSet,
    ) -> Option<GraphPath> {
        let n = self.vertices.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = ElemSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            let mut nbrs = self.adjacency[x].clone();
            nbrs.sort();
            for (e, y) in nbrs {
                if banned_edges.contains(e) || seen.contains(y) || !(allowed.contains(y) || y == to) {
                    continue;
                }
                seen = seen.with(y);
                prev[y] = Some((x, e));
                queue.push_back(y);
            }
        }
        if !seen.contains(to) {
            return None;
        }
        let mut vertices = vec![to];
        let mut edges = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, e) = prev[cur].expect("reached vertex has a predecessor");
            edges.push(e);
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        edges.reverse();
        Some(GraphPath { vertices, edges })
    }

    /// Whether `path` is a simple path in this graph.
    pub fn is_path(&self, path: &GraphPath) -> bool {
        if path.vertices.is_empty() || path.edges.len() + 1 != path.vertices.len() {
            return false;
        }
        let distinct: BTreeSet<usize> = path.vertices.iter().copied().collect();
        if distinct.len() != path.vertices.len() {
            return false;
        }
        path.edges.iter().enumerate().all(|(i, &e)| {
            let edge = &self.edges[e];
            let (a, b) = (path.vertices[i], path.vertices[i + 1]);
            (edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)
        })
    }

    /// Whether `n` is a matroid on this graph's edges whose circuits are
    /// cycles and whose cocircuits are bonds.
    pub fn is_graph_matroid(&self, n: &Matroid) -> bool {
        let labels: Vec<&str> = self.edges.iter().map(|e| e.label.as_str()).collect();
        n.ground().iter().map(String::as_str).eq(labels.iter().copied())
            && n.circuits().iter().all(|&c| self.is_cycle(c))
            && n.cocircuits().iter().all(|&b| self.is_bond(b))
    }

    /// Reroutes the circuit `spec.circle` of the graph matroid `n` along
    /// `path`: returns the circuit made of the arc `spec.v → spec.w` and the
    /// path. The path may touch the opposite arc; each step of the induction
    /// on such touches is checked against the circuits of `n`.
    pub fn rerouted_circuit(
        &self,
        n: &Matroid,
        spec: &OrientedArcSpec,
        path: &GraphPath,
    ) -> Result<ElemSet> {
        if !self.is_graph_matroid(n) {
            return Err(Error::AssertionFailure(
                "matroid is not a matroid of this graph".into(),
            ));
        }
        if !n.is_circuit(spec.circle) {
            return Err(Error::AssertionFailure("circle is not a circuit".into()));
        }
        let walk = self.oriented_walk(spec)?;
        if spec.v == spec.w {
            return Ok(spec.circle);
        }
        if !self.is_path(path) || path.start() != spec.v || path.end() != spec.w {
            return Err(Error::PreconditionViolated(format!(
                "path must run from {} to {}",
                self.vertices[spec.v], self.vertices[spec.w]
            )));
        }
        let arc = walk.arc(spec.v, spec.w).expect("endpoints on circle");
        let interior: ElemSet = arc.vertices[1..arc.vertices.len() - 1].iter().copied().collect();
        let inner_path: ElemSet = path.vertices[1..path.vertices.len() - 1].iter().copied().collect();
        if !inner_path.is_disjoint(interior) || !path.edge_set().is_disjoint(arc.edge_set()) {
            return Err(Error::PreconditionViolated(
                "path meets the interior of the arc".into(),
            ));
        }
        self.reroute(n, walk, path.clone())
    }

    fn reroute(&self, n: &Matroid, walk: CircleWalk, path: GraphPath) -> Result<ElemSet> {
        let x = path.start();
        let y = path.end();
        let on_circle: ElemSet = walk.vertices.iter().copied().collect();
        let split = path.vertices[1..]
            .iter()
            .position(|v| on_circle.contains(*v))
            .map(|p| p + 1)
            .expect("path ends on the circle");
        let z = path.vertices[split];
        let head = GraphPath {
            vertices: path.vertices[..=split].to_vec(),
            edges: path.edges[..split].to_vec(),
        };
        let arc = walk.arc(x, z).expect("vertices on circle");
        let rerouted = arc.edge_set().union(head.edge_set());
        if !n.is_circuit(rerouted) {
            return Err(Error::AssertionFailure(format!(
                "rerouted set {:?} is not a circuit",
                self.edge_labels(rerouted)
            )));
        }
        if z == y {
            return Ok(rerouted);
        }
        // new circle: x → z along the old circle, then back along the head
        let mut vertices = arc.vertices[..arc.vertices.len() - 1].to_vec();
        let mut edges = arc.edges.clone();
        vertices.extend(head.vertices[1..].iter().rev());
        edges.extend(head.edges.iter().rev());
        let new_walk = CircleWalk { vertices, edges };
        let tail = GraphPath {
            vertices: path.vertices[split..].to_vec(),
            edges: path.edges[split..].to_vec(),
        };
        self.reroute(n, new_walk, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> FiniteGraph {
        FiniteGraph::new([
            ("a", "1", "2"),
            ("b", "1", "3"),
            ("c", "1", "4"),
            ("d", "2", "3"),
            ("e", "2", "4"),
            ("f", "3", "4"),
        ])
        .unwrap()
    }

    #[test]
    fn triangle_cycles_and_bonds() {
        let g = FiniteGraph::new([("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")]).unwrap();
        assert_eq!(g.cycles().len(), 1);
        let bonds = g.bonds();
        assert_eq!(bonds.len(), 3);
        assert!(bonds.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        assert_eq!(g.cycles().len(), 7);
        assert_eq!(g.bonds().len(), 7);
        let m = g.cycle_matroid();
        assert_eq!(m.cocircuits(), g.bonds().as_slice());
    }

    #[test]
    fn tree_has_only_bridges() {
        let g = FiniteGraph::new([("p", "1", "2"), ("q", "2", "3"), ("r", "2", "4")]).unwrap();
        assert!(g.cycles().is_empty());
        assert_eq!(g.bonds(), vec![ElemSet::singleton(0), ElemSet::singleton(1), ElemSet::singleton(2)]);
    }

    #[test]
    fn loop_and_parallel_pair() {
        let g = FiniteGraph::new([("l", "1", "1"), ("p", "1", "2"), ("q", "1", "2")]).unwrap();
        let cycles = g.cycles();
        assert_eq!(cycles, vec![ElemSet::singleton(0), ElemSet::from_indices([1, 2])]);
        assert_eq!(g.bonds(), vec![ElemSet::from_indices([1, 2])]);
    }

    #[test]
    fn shortcut_trivial_and_single_edge() {
        let g = k4();
        let circle = g.edge_set(["a", "d", "f", "c"]).unwrap(); // 1-2-3-4-1
        let v1 = g.vertex_index("1").unwrap();
        let v2 = g.vertex_index("2").unwrap();
        let spec = OrientedArcSpec { circle, v: v1, w: v1, forward: true };
        assert_eq!(g.shortcut_path(&spec, ElemSet::EMPTY).unwrap().path, GraphPath::trivial(v1));
        let spec = OrientedArcSpec { circle, v: v1, w: v2, forward: true };
        let sc = g.shortcut_path(&spec, ElemSet::EMPTY).unwrap();
        assert_eq!(sc.path.edges, vec![g.edge_index("a").unwrap()]);
        assert!(sc.bond.is_none());
    }

    #[test]
    fn shortcut_with_bond_in_k4() {
        let g = k4();
        let circle = g.edge_set(["a", "d", "f", "c"]).unwrap();
        let v1 = g.vertex_index("1").unwrap();
        let v3 = g.vertex_index("3").unwrap();
        let spec = OrientedArcSpec { circle, v: v1, w: v3, forward: true };
        let sc = g.shortcut_path(&spec, ElemSet::EMPTY).unwrap();
        assert_eq!(g.edge_labels(sc.path.edge_set()), vec!["b"]);
        let bond = sc.bond.unwrap();
        assert!(g.is_bond(bond.edges));
        assert_eq!(g.vertex_names(bond.inner_side), vec!["2"]);
    }

    #[test]
    fn reroute_triangle_in_k4() {
        let g = k4();
        let n = g.cycle_matroid();
        let tri = g.edge_set(["a", "b", "d"]).unwrap(); // 1-2-3
        let v1 = g.vertex_index("1").unwrap();
        let v2 = g.vertex_index("2").unwrap();
        let v4 = g.vertex_index("4").unwrap();
        let walk = g.circle_walk(tri).unwrap();
        // pick the orientation whose arc 1 → 2 passes through 3
        let forward = walk.arc(v1, v2).unwrap().edges.len() == 2;
        let spec = OrientedArcSpec { circle: tri, v: v1, w: v2, forward };
        let path = GraphPath {
            vertices: vec![v1, v4, v2],
            edges: vec![g.edge_index("c").unwrap(), g.edge_index("e").unwrap()],
        };
        let out = g.rerouted_circuit(&n, &spec, &path).unwrap();
        assert_eq!(g.edge_labels(out), vec!["b", "c", "d", "e"]);
    }

    #[test]
    fn reroute_along_opposite_arc_returns_circle() {
        let g = k4();
        let n = g.cycle_matroid();
        let sq = g.edge_set(["a", "d", "f", "c"]).unwrap(); // 1-2-3-4-1
        let v = |s: &str| g.vertex_index(s).unwrap();
        let e = |s: &str| g.edge_index(s).unwrap();
        let walk = g.circle_walk(sq).unwrap();
        let forward = walk.arc(v("1"), v("2")).unwrap().edges.len() == 1;
        let spec = OrientedArcSpec { circle: sq, v: v("1"), w: v("2"), forward };
        // opposite arc 1-4-3-2 used as the path
        let path = GraphPath {
            vertices: vec![v("1"), v("4"), v("3"), v("2")],
            edges: vec![e("c"), e("f"), e("d")],
        };
        assert_eq!(g.rerouted_circuit(&n, &spec, &path).unwrap(), sq);
        let same = OrientedArcSpec { circle: sq, v: v("1"), w: v("1"), forward };
        assert_eq!(g.rerouted_circuit(&n, &same, &GraphPath::trivial(v("1"))).unwrap(), sq);
    }
}
