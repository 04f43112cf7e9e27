//! One-ended, eventually periodic graphs built from a finite prefix and a
//! layer repeated forever, with circuits and bonds described symbolically.
//!
//! Layer `i` renames vertex `v` to `v#i` and edge `l` to `l#i`. Its left
//! boundary is identified with the right boundary of layer `i - 1`; for
//! layer 0 the left boundary keeps its own names so the prefix can attach.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::set::ElemSet;

/// Largest layer (in edges) for which tail patterns are enumerated.
const MAX_PATTERN_EDGES: usize = 16;
/// Largest vertex count for subset scans over window vertices.
const MAX_SCAN_VERTICES: usize = 22;

type EdgeSpec = (String, String, String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    prefix: Vec<EdgeSpec>,
    layer: Vec<EdgeSpec>,
    left: Vec<String>,
    right: Vec<String>,
}

/// `core ∪ { l#i : l ∈ tail, i ≥ start }`. Finite iff `tail` is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicEdgeSet {
    pub start: usize,
    pub tail: BTreeSet<String>,
    pub core: BTreeSet<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymbolicSize {
    Finite(usize),
    Infinite,
}

/// Which end set the circuits may use: none, or the single end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Psi {
    Empty,
    End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMeetReport {
    pub circuits: usize,
    pub bonds: usize,
    pub pairs_checked: usize,
    pub max_finite_intersection: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndDisjointnessReport {
    pub circuits_using_end: usize,
    pub bonds_using_end: usize,
    pub disjoint: bool,
}

fn split_label(label: &str) -> Option<(&str, usize)> {
    let (base, i) = label.rsplit_once('#')?;
    Some((base, i.parse().ok()?))
}

impl SymbolicEdgeSet {
    pub fn finite(core: BTreeSet<String>) -> Self {
        SymbolicEdgeSet {
            start: 0,
            tail: BTreeSet::new(),
            core,
        }
    }

    /// Builds the set and moves tail copies found in the core back into the
    /// tail, so equal sets get equal representations.
    pub fn new(mut core: BTreeSet<String>, mut start: usize, tail: BTreeSet<String>) -> Self {
        if tail.is_empty() {
            return Self::finite(core);
        }
        core.retain(|l| match split_label(l) {
            Some((b, i)) => !(i >= start && tail.contains(b)),
            None => true,
        });
        while start > 0 && tail.iter().all(|b| core.contains(&format!("{b}#{}", start - 1))) {
            start -= 1;
            for b in &tail {
                core.remove(&format!("{b}#{start}"));
            }
        }
        SymbolicEdgeSet { start, tail, core }
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.core.contains(label)
            || split_label(label).is_some_and(|(b, i)| i >= self.start && self.tail.contains(b))
    }

    /// Size of the intersection; infinite exactly when the tails share a label.
    pub fn intersect(&self, other: &SymbolicEdgeSet) -> SymbolicSize {
        if !self.tail.is_disjoint(&other.tail) {
            return SymbolicSize::Infinite;
        }
        let mut common: BTreeSet<&String> = self.core.iter().filter(|l| other.contains(l)).collect();
        common.extend(other.core.iter().filter(|l| self.contains(l)));
        SymbolicSize::Finite(common.len())
    }

    /// The members among the first `layers` layers (and the prefix).
    pub fn expand(&self, layers: usize) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self
            .core
            .iter()
            .filter(|l| split_label(l).is_none_or(|(_, i)| i < layers))
            .cloned()
            .collect();
        for i in self.start..layers {
            out.extend(self.tail.iter().map(|b| format!("{b}#{i}")));
        }
        out
    }

    pub fn describe(&self) -> String {
        let core: Vec<&str> = self.core.iter().map(String::as_str).collect();
        if self.is_finite() {
            format!("{{{}}}", core.join(" "))
        } else {
            let tail: Vec<&str> = self.tail.iter().map(String::as_str).collect();
            format!("{{{}}} + {{{}}}#{}..", core.join(" "), tail.join(" "), self.start)
        }
    }
}

/// Union-find over string keys.
#[derive(Default)]
struct Components {
    parent: BTreeMap<String, String>,
}

impl Components {
    fn add(&mut self, v: &str) {
        self.parent.entry(v.to_string()).or_insert_with(|| v.to_string());
    }

    fn find(&mut self, v: &str) -> String {
        let p = self.parent[v].clone();
        if p == v {
            return p;
        }
        let r = self.find(&p);
        self.parent.insert(v.to_string(), r.clone());
        r
    }

    fn union(&mut self, a: &str, b: &str) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }

    fn roots(&mut self) -> BTreeSet<String> {
        let keys: Vec<String> = self.parent.keys().cloned().collect();
        keys.iter().map(|k| self.find(k)).collect()
    }
}

impl LayeredGraph {
    /// A layered graph; `layer`, `left` and `right` may all be empty, giving
    /// a finite graph.
    pub fn new(prefix: Vec<EdgeSpec>, layer: Vec<EdgeSpec>, left: Vec<String>, right: Vec<String>) -> Result<Self> {
        let lg = LayeredGraph {
            prefix,
            layer,
            left,
            right,
        };
        for (l, u, v) in lg.prefix.iter().chain(&lg.layer) {
            if [l, u, v].iter().any(|s| s.contains('#')) {
                return Err(Error::PreconditionViolated("labels may not contain `#`".into()));
            }
        }
        if lg.is_finite() {
            if !lg.left.is_empty() || !lg.right.is_empty() {
                return Err(Error::PreconditionViolated("boundaries need a layer".into()));
            }
            FiniteGraph::new(lg.prefix.iter().map(|(l, u, v)| (l, u, v)))?;
            return Ok(lg);
        }
        if lg.left.is_empty() || lg.left.len() != lg.right.len() {
            return Err(Error::PreconditionViolated(
                "left and right boundaries must be nonempty and of equal size".into(),
            ));
        }
        let lset: BTreeSet<&String> = lg.left.iter().collect();
        let rset: BTreeSet<&String> = lg.right.iter().collect();
        if lset.len() != lg.left.len() || rset.len() != lg.right.len() || !lset.is_disjoint(&rset) {
            return Err(Error::PreconditionViolated("boundary vertices must be distinct".into()));
        }
        let layer = FiniteGraph::with_vertices(
            lg.left.iter().chain(&lg.right),
            lg.layer.iter().map(|(l, u, v)| (l, u, v)),
        )?;
        // a connected layer holding its whole boundary forces a single end
        if layer.components().len() != 1 {
            return Err(Error::PreconditionViolated(
                "the layer must be connected and contain its boundary".into(),
            ));
        }
        if lg.unroll(1)?.components().len() != 1 {
            return Err(Error::PreconditionViolated("the graph must be connected".into()));
        }
        Ok(lg)
    }

    pub fn is_finite(&self) -> bool {
        self.layer.is_empty()
    }

    pub fn prefix_edges(&self) -> &[EdgeSpec] {
        &self.prefix
    }

    pub fn layer_edges(&self) -> &[EdgeSpec] {
        &self.layer
    }

    pub fn left_boundary(&self) -> &[String] {
        &self.left
    }

    pub fn right_boundary(&self) -> &[String] {
        &self.right
    }

    /// Name of layer vertex `v` in layer `i`.
    pub fn vertex_name(&self, i: usize, v: &str) -> String {
        match self.left.iter().position(|l| l == v) {
            Some(_) if i == 0 => v.to_string(),
            Some(k) => format!("{}#{}", self.right[k], i - 1),
            None => format!("{v}#{i}"),
        }
    }

    /// Prefix plus the first `layers` layers.
    pub fn unroll(&self, layers: usize) -> Result<FiniteGraph> {
        let mut edges: Vec<EdgeSpec> = self.prefix.clone();
        if !self.is_finite() {
            for i in 0..layers {
                for (l, u, v) in &self.layer {
                    edges.push((format!("{l}#{i}"), self.vertex_name(i, u), self.vertex_name(i, v)));
                }
            }
        }
        FiniteGraph::new(edges.iter().map(|(l, u, v)| (l, u, v)))
    }

    /// Vertices of layer `i`'s right boundary, which lead on to the end.
    fn frontier(&self, layers: usize) -> BTreeSet<String> {
        if self.is_finite() || layers == 0 {
            // with no layer the left boundary of layer 0 is the frontier
            return self.left.iter().map(|v| self.vertex_name(0, v)).collect();
        }
        self.right.iter().map(|v| format!("{v}#{}", layers - 1)).collect()
    }

    fn own_vertices(&self) -> Vec<String> {
        let mut vs: BTreeSet<String> = BTreeSet::new();
        for (_, u, v) in &self.layer {
            vs.insert(u.clone());
            vs.insert(v.clone());
        }
        vs.extend(self.right.iter().cloned());
        vs.into_iter().filter(|v| !self.left.contains(v)).collect()
    }

    fn finite_cycles(&self, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
        let g = self.unroll(d)?;
        Ok(g.cycles()
            .into_iter()
            .map(|c| SymbolicEdgeSet::finite(g.edge_labels(c).into_iter().collect()))
            .collect())
    }

    /// Bonds with finitely many edges, all inside the window.
    fn finite_bonds(&self, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
        let g = self.unroll(d)?;
        if self.is_finite() {
            return Ok(g
                .bonds()
                .into_iter()
                .map(|b| SymbolicEdgeSet::finite(g.edge_labels(b).into_iter().collect()))
                .collect());
        }
        let frontier: ElemSet = self
            .frontier(d)
            .iter()
            .filter_map(|v| g.vertex_index(v).ok())
            .collect();
        let candidates = g.all_vertices().difference(frontier);
        if candidates.len() > MAX_SCAN_VERTICES {
            return Err(Error::TooLarge(candidates.len()));
        }
        let mut out = BTreeSet::new();
        for x in candidates.subsets() {
            if x.is_empty() || !g.induced_connected(x) {
                continue;
            }
            // the rest must stay connected once every frontier vertex is
            // joined through the part beyond the window
            let rest = g.all_vertices().difference(x);
            let mut comps = Components::default();
            comps.add("∞");
            for v in rest.iter() {
                comps.add(&g.vertices()[v]);
                if frontier.contains(v) {
                    comps.union(&g.vertices()[v], "∞");
                }
            }
            for e in g.edges() {
                if rest.contains(e.u) && rest.contains(e.v) {
                    comps.union(&g.vertices()[e.u], &g.vertices()[e.v]);
                }
            }
            if comps.roots().len() == 1 {
                out.insert(SymbolicEdgeSet::finite(g.edge_labels(g.cut(x)).into_iter().collect()));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Double rays whose tails repeat one per-layer pattern from layer `s`
    /// on, for `s < d`, joined by a path through the prefix and earlier layers.
    fn double_rays(&self, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
        if self.is_finite() {
            return Ok(Vec::new());
        }
        let m = self.layer.len();
        if m > MAX_PATTERN_EDGES {
            return Err(Error::TooLarge(m));
        }
        let layer = FiniteGraph::with_vertices(
            self.left.iter().chain(&self.right),
            self.layer.iter().map(|(l, u, v)| (l, u, v)),
        )?;
        let mut out = BTreeSet::new();
        for pattern in ElemSet::full(m).subsets() {
            let Some((open, blocked)) = self.ray_pattern(&layer, pattern) else {
                continue;
            };
            let tail: BTreeSet<String> = layer.edge_labels(pattern).into_iter().collect();
            for s in 0..d {
                let g = self.unroll(s)?;
                let ends: Vec<String> = open.iter().map(|&k| self.vertex_name(s, &self.left[k])).collect();
                let (Ok(u), Ok(w)) = (g.vertex_index(&ends[0]), g.vertex_index(&ends[1])) else {
                    continue;
                };
                let avoid: ElemSet = blocked
                    .iter()
                    .filter_map(|&k| g.vertex_index(&self.vertex_name(s, &self.left[k])).ok())
                    .collect();
                for path in simple_paths(&g, u, w, avoid) {
                    let core = g.edge_labels(path).into_iter().collect();
                    out.insert(SymbolicEdgeSet::new(core, s, tail.clone()));
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// For a per-layer edge pattern whose repetition is two disjoint rays,
    /// returns the boundary positions where the rays start and the positions
    /// of left vertices the pattern already passes through twice.
    fn ray_pattern(&self, layer: &FiniteGraph, pattern: ElemSet) -> Option<(Vec<usize>, Vec<usize>)> {
        let deg = |name: &str| -> usize {
            let Ok(v) = layer.vertex_index(name) else { return 0 };
            pattern
                .iter()
                .map(|e| {
                    let edge = &layer.edges()[e];
                    (edge.u == v) as usize + (edge.v == v) as usize
                })
                .sum()
        };
        if pattern.is_empty() || pattern.iter().any(|e| layer.edges()[e].is_loop()) {
            return None;
        }
        let boundary: BTreeSet<&String> = self.left.iter().chain(&self.right).collect();
        for v in layer.vertices() {
            if !boundary.contains(v) && !matches!(deg(v), 0 | 2) {
                return None;
            }
        }
        let mut open = Vec::new();
        let mut blocked = Vec::new();
        for k in 0..self.left.len() {
            let (dl, dr) = (deg(&self.left[k]), deg(&self.right[k]));
            if !matches!(dl + dr, 0 | 2) {
                return None;
            }
            match dl {
                1 => open.push(k),
                2 => blocked.push(k),
                _ => {}
            }
        }
        if open.len() != 2 {
            return None;
        }
        // the pattern inside one layer must be two paths, each running from
        // an open left vertex to the matching right side
        let mut comps = Components::default();
        for e in pattern.iter() {
            let edge = &layer.edges()[e];
            let (a, b) = (&layer.vertices()[edge.u], &layer.vertices()[edge.v]);
            comps.add(a);
            comps.add(b);
            comps.union(a, b);
        }
        if comps.roots().len() != 2 {
            return None;
        }
        let lefts: BTreeSet<String> = open.iter().map(|&k| comps.find(&self.left[k])).collect();
        let rights: BTreeSet<String> = open.iter().map(|&k| comps.find(&self.right[k])).collect();
        (lefts.len() == 2 && rights.len() == 2).then_some((open, blocked))
    }

    /// Partition of the pattern's left boundary positions by connectivity
    /// through all later layers, and whether some piece of a layer never
    /// reaches its left boundary.
    fn forward_partition(&self, pattern: &BTreeSet<String>) -> (BTreeMap<usize, usize>, bool) {
        let in_x: Vec<usize> = (0..self.left.len()).filter(|&k| pattern.contains(&self.right[k])).collect();
        let mut classes: BTreeMap<usize, usize> = in_x.iter().map(|&k| (k, k)).collect();
        loop {
            let mut comps = Components::default();
            for &k in &in_x {
                comps.add(&format!("L{}", self.left[k]));
                comps.add(&format!("R{}", self.right[k]));
            }
            for v in pattern {
                comps.add(&format!("R{v}"));
            }
            let name = |v: &str| -> Option<String> {
                match self.left.iter().position(|l| l == v) {
                    Some(k) => in_x.contains(&k).then(|| format!("L{v}")),
                    None => pattern.contains(v).then(|| format!("R{v}")),
                }
            };
            for (_, u, v) in &self.layer {
                if let (Some(a), Some(b)) = (name(u), name(v)) {
                    comps.union(&a, &b);
                }
            }
            for &k in &in_x {
                let rep = classes[&k];
                comps.union(&format!("R{}", self.right[k]), &format!("R{}", self.right[rep]));
            }
            let mut next = BTreeMap::new();
            for &k in &in_x {
                let root = comps.find(&format!("L{}", self.left[k]));
                let rep = in_x
                    .iter()
                    .copied()
                    .find(|&j| comps.find(&format!("L{}", self.left[j])) == root)
                    .expect("k itself qualifies");
                next.insert(k, rep);
            }
            if next == classes {
                let anchored: BTreeSet<String> = in_x
                    .iter()
                    .map(|&k| comps.find(&format!("L{}", self.left[k])))
                    .collect();
                let orphan = comps.roots().iter().any(|r| !anchored.contains(r));
                return (classes, orphan);
            }
            classes = next;
        }
    }

    /// Whether `finite ∪ pattern` (pattern repeated from layer `s`) induces a
    /// connected subgraph of the infinite graph.
    fn side_connected(
        &self,
        s: usize,
        window: &FiniteGraph,
        finite: ElemSet,
        pattern: &BTreeSet<String>,
    ) -> bool {
        let (classes, orphan) = self.forward_partition(pattern);
        if orphan {
            return false;
        }
        let mut comps = Components::default();
        let member = |v: &str| -> bool {
            match window.vertex_index(v) {
                Ok(i) => finite.contains(i),
                Err(_) => split_label(v).is_some_and(|(b, i)| i == s && pattern.contains(b)),
            }
        };
        for v in finite.iter() {
            comps.add(&window.vertices()[v]);
        }
        for v in pattern {
            comps.add(&format!("{v}#{s}"));
        }
        for e in window.edges() {
            if finite.contains(e.u) && finite.contains(e.v) {
                comps.union(&window.vertices()[e.u], &window.vertices()[e.v]);
            }
        }
        for (_, u, v) in &self.layer {
            let (a, b) = (self.vertex_name(s, u), self.vertex_name(s, v));
            if member(&a) && member(&b) {
                comps.union(&a, &b);
            }
        }
        for (&k, &rep) in &classes {
            comps.union(&format!("{}#{s}", self.right[k]), &format!("{}#{s}", self.right[rep]));
        }
        comps.roots().len() == 1
    }

    /// Bonds with infinitely many edges: one side is a finite vertex set in
    /// the first `s` layers together with a repeated vertex pattern.
    fn infinite_bonds(&self, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
        if self.is_finite() {
            return Ok(Vec::new());
        }
        let own = self.own_vertices();
        if own.len() > MAX_PATTERN_EDGES {
            return Err(Error::TooLarge(own.len()));
        }
        let mut out = BTreeSet::new();
        for s in 0..d {
            let window = self.unroll(s)?;
            if window.vertices().len() > MAX_SCAN_VERTICES {
                return Err(Error::TooLarge(window.vertices().len()));
            }
            for mask in 1..(1usize << own.len()) - 1 {
                let pattern: BTreeSet<String> =
                    (0..own.len()).filter(|i| mask >> i & 1 == 1).map(|i| own[i].clone()).collect();
                let complement: BTreeSet<String> =
                    own.iter().filter(|v| !pattern.contains(*v)).cloned().collect();
                for finite in window.all_vertices().subsets() {
                    let rest = window.all_vertices().difference(finite);
                    if !self.side_connected(s, &window, finite, &pattern)
                        || !self.side_connected(s, &window, rest, &complement)
                    {
                        continue;
                    }
                    if let Some(b) = self.symbolic_cut(s, &window, finite, &pattern) {
                        out.insert(b);
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    fn symbolic_cut(
        &self,
        s: usize,
        window: &FiniteGraph,
        finite: ElemSet,
        pattern: &BTreeSet<String>,
    ) -> Option<SymbolicEdgeSet> {
        let mut core: BTreeSet<String> = window.edge_labels(window.cut(finite)).into_iter().collect();
        let first = |v: &str| -> bool {
            let name = self.vertex_name(s, v);
            match window.vertex_index(&name) {
                Ok(i) => finite.contains(i),
                Err(_) => pattern.contains(v),
            }
        };
        let later = |v: &str| -> bool {
            match self.left.iter().position(|l| l == v) {
                Some(k) => pattern.contains(&self.right[k]),
                None => pattern.contains(v),
            }
        };
        let mut tail = BTreeSet::new();
        for (l, u, v) in &self.layer {
            if first(u) != first(v) {
                core.insert(format!("{l}#{s}"));
            }
            if later(u) != later(v) {
                tail.insert(l.clone());
            }
        }
        (!tail.is_empty()).then(|| SymbolicEdgeSet::new(core, s + 1, tail))
    }
}

/// Edge sets of simple paths from `u` to `w` whose inner vertices avoid `avoid`.
fn simple_paths(g: &FiniteGraph, u: usize, w: usize, avoid: ElemSet) -> Vec<ElemSet> {
    fn go(g: &FiniteGraph, cur: usize, w: usize, avoid: ElemSet, seen: ElemSet, used: ElemSet, out: &mut Vec<ElemSet>) {
        if cur == w {
            out.push(used);
            return;
        }
        for &(e, y) in g.incident(cur) {
            if seen.contains(y) || (avoid.contains(y) && y != w) {
                continue;
            }
            go(g, y, w, avoid, seen.with(y), used.with(e), out);
        }
    }
    let mut out = Vec::new();
    if u != w {
        go(g, u, w, avoid, ElemSet::singleton(u), ElemSet::EMPTY, &mut out);
    }
    out
}

/// Circuits: finite cycles in the window and, when the end is allowed,
/// double rays running into it.
pub fn layered_circuits(lg: &LayeredGraph, psi: Psi, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
    let mut out: BTreeSet<SymbolicEdgeSet> = lg.finite_cycles(d)?.into_iter().collect();
    if psi == Psi::End {
        out.extend(lg.double_rays(d)?);
    }
    Ok(out.into_iter().collect())
}

/// Bonds: finite bonds in the window and, when circuits may not use the end,
/// infinite bonds whose closure contains it.
pub fn layered_bonds(lg: &LayeredGraph, psi: Psi, d: usize) -> Result<Vec<SymbolicEdgeSet>> {
    let mut out: BTreeSet<SymbolicEdgeSet> = lg.finite_bonds(d)?.into_iter().collect();
    if psi == Psi::Empty {
        out.extend(lg.infinite_bonds(d)?);
    }
    Ok(out.into_iter().collect())
}

/// Checks that no circuit meets a bond of the same family in exactly one edge.
pub fn check_never_meet_once_graph(lg: &LayeredGraph, psi: Psi, d: usize) -> Result<GraphMeetReport> {
    let circuits = layered_circuits(lg, psi, d)?;
    let bonds = layered_bonds(lg, psi, d)?;
    let mut max_finite = 0;
    for c in &circuits {
        for b in &bonds {
            match c.intersect(b) {
                SymbolicSize::Finite(1) => {
                    return Err(Error::LemmaViolation(format!(
                        "circuit {} meets bond {} in one edge",
                        c.describe(),
                        b.describe()
                    )))
                }
                SymbolicSize::Finite(k) => max_finite = max_finite.max(k),
                SymbolicSize::Infinite => {}
            }
        }
    }
    Ok(GraphMeetReport {
        circuits: circuits.len(),
        bonds: bonds.len(),
        pairs_checked: circuits.len() * bonds.len(),
        max_finite_intersection: max_finite,
    })
}

/// Checks that no circuit and bond of the same family both reach the end.
pub fn end_disjointness_report(lg: &LayeredGraph, psi: Psi, d: usize) -> Result<EndDisjointnessReport> {
    let circuits = layered_circuits(lg, psi, d)?;
    let bonds = layered_bonds(lg, psi, d)?;
    let circuits_using_end = circuits.iter().filter(|c| !c.is_finite()).count();
    let bonds_using_end = bonds.iter().filter(|b| !b.is_finite()).count();
    let disjoint = circuits_using_end == 0 || bonds_using_end == 0;
    if !disjoint {
        return Err(Error::LemmaViolation(format!(
            "{circuits_using_end} circuits and {bonds_using_end} bonds both reach the end"
        )));
    }
    Ok(EndDisjointnessReport {
        circuits_using_end,
        bonds_using_end,
        disjoint,
    })
}

/// A ladder with one prefix rung: rails run to the end, rungs join them.
pub fn ladder() -> LayeredGraph {
    let e = |l: &str, u: &str, v: &str| (l.to_string(), u.to_string(), v.to_string());
    LayeredGraph::new(
        vec![e("r0", "a", "b")],
        vec![e("rail1", "a", "a2"), e("rail2", "b", "b2"), e("rung", "a2", "b2")],
        vec!["a".into(), "b".into()],
        vec!["a2".into(), "b2".into()],
    )
    .expect("valid ladder")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn normalisation_pulls_start_down() {
        let a = SymbolicEdgeSet::new(set(&["r0", "x#0", "x#1"]), 2, set(&["x"]));
        assert_eq!(a, SymbolicEdgeSet::new(set(&["r0"]), 0, set(&["x"])));
        assert!(a.contains("x#7"));
        assert!(!a.contains("y#0"));
    }

    #[test]
    fn symbolic_intersections() {
        let a = SymbolicEdgeSet::new(set(&["r0"]), 0, set(&["x"]));
        let b = SymbolicEdgeSet::new(set(&["r0", "y#0"]), 1, set(&["y"]));
        assert_eq!(a.intersect(&b), SymbolicSize::Finite(1));
        let c = SymbolicEdgeSet::new(BTreeSet::new(), 3, set(&["x", "y"]));
        assert_eq!(a.intersect(&c), SymbolicSize::Infinite);
        let f = SymbolicEdgeSet::finite(set(&["x#2", "x#5", "z#0"]));
        assert_eq!(f.intersect(&c), SymbolicSize::Finite(1));
        assert_eq!(f.intersect(&a), SymbolicSize::Finite(2));
    }

    #[test]
    fn ladder_double_ray_along_the_rails() {
        let lg = ladder();
        let rays: Vec<_> = layered_circuits(&lg, Psi::End, 3)
            .unwrap()
            .into_iter()
            .filter(|c| !c.is_finite())
            .collect();
        let rails = set(&["rail1", "rail2"]);
        assert!(rays.iter().all(|r| r.tail == rails));
        assert!(rays.contains(&SymbolicEdgeSet::new(set(&["r0"]), 0, rails.clone())));
        assert!(rays.contains(&SymbolicEdgeSet::new(set(&["rung#1"]), 2, rails.clone())));
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn ladder_rung_bond_uses_the_end() {
        let lg = ladder();
        let bonds = layered_bonds(&lg, Psi::Empty, 2).unwrap();
        let rungs = SymbolicEdgeSet::new(set(&["r0"]), 0, set(&["rung"]));
        assert!(bonds.contains(&rungs));
        assert!(layered_bonds(&lg, Psi::End, 4).unwrap().iter().all(SymbolicEdgeSet::is_finite));
        assert!(layered_circuits(&lg, Psi::Empty, 4).unwrap().iter().all(SymbolicEdgeSet::is_finite));
    }

    #[test]
    fn ladder_reports_pass() {
        let lg = ladder();
        for psi in [Psi::Empty, Psi::End] {
            for d in 1..=4 {
                check_never_meet_once_graph(&lg, psi, d).unwrap();
                end_disjointness_report(&lg, psi, d).unwrap();
            }
        }
    }

    #[test]
    fn prefix_only_graph_is_finite() {
        let e = |l: &str, u: &str, v: &str| (l.to_string(), u.to_string(), v.to_string());
        let lg = LayeredGraph::new(
            vec![e("x", "1", "2"), e("y", "2", "3"), e("z", "3", "1")],
            vec![],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(layered_circuits(&lg, Psi::End, 3).unwrap().len(), 1);
        assert_eq!(layered_bonds(&lg, Psi::Empty, 3).unwrap().len(), 3);
        let r = end_disjointness_report(&lg, Psi::End, 3).unwrap();
        assert_eq!((r.circuits_using_end, r.bonds_using_end), (0, 0));
    }

    #[test]
    fn rejects_disconnected_layers() {
        let e = |l: &str, u: &str, v: &str| (l.to_string(), u.to_string(), v.to_string());
        let two_rays = LayeredGraph::new(
            vec![e("r0", "a", "b")],
            vec![e("p", "a", "a2"), e("q", "b", "b2")],
            vec!["a".into(), "b".into()],
            vec!["a2".into(), "b2".into()],
        );
        assert!(matches!(two_rays, Err(Error::PreconditionViolated(_))));
    }
}
