//! The acceptance suite: nine property checks over the corpus, the rays and
//! the ladder. Reports contain no timings so that reruns are byte-identical.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;

use crate::corpus::{corpus, corpus_graphs, corpus_trees, mutations, seeded_rng, CorpusMatroid};
use crate::decomposition::{canonical_decompose, classify, roundtrip, torso, verify_canonical, TorsoKind};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, OrientedArcSpec};
use crate::layered::{check_never_meet_once_graph, end_disjointness_report, ladder, Psi};
use crate::matroid::{Matroid, ScrawlVerdict};
use crate::oracle::{first_failing_axiom, two_sum_circuits, RawGraph, RawMatroid};
use crate::ray::{c4_ray, q_ray};
use crate::set::ElemSet;
use crate::tree::MatroidTree;
use crate::two_sum::{fold_two_sums, two_sum, SharedEdgeWitness};

/// Violations listed per criterion before the rest are only counted.
const SHOWN_VIOLATIONS: usize = 5;

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "axiom gate"),
    (2, "base exchange, cocircuits, minors and scrawls"),
    (3, "2-sum algebra"),
    (4, "trees never meet once"),
    (5, "canonical decomposition"),
    (6, "ray results"),
    (7, "graph side"),
    (8, "finitarisation and uniform minors"),
    (9, "determinism"),
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub verbose: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub checks: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn status_line(&self) -> String {
        format!(
            "{} criterion {} ({}): {} checks, {} violations",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks,
            self.violations.len()
        )
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut out = self.status_line();
        out.push('\n');
        if verbose {
            for n in &self.notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
        let shown = if verbose { self.violations.len() } else { SHOWN_VIOLATIONS };
        for v in self.violations.iter().take(shown) {
            let _ = writeln!(out, "  violation: {v}");
        }
        if self.violations.len() > shown {
            let _ = writeln!(out, "  ... {} more", self.violations.len() - shown);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub seed: u64,
    pub outcomes: Vec<CriterionOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CriterionOutcome::passed)
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut out = format!("suite seed {}\n", self.seed);
        for o in &self.outcomes {
            out.push_str(&o.render(verbose));
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed()).count();
        let _ = writeln!(out, "{} of {} criteria passed", self.outcomes.len() - failed, self.outcomes.len());
        out
    }
}

struct Tally {
    checks: usize,
    violations: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    /// Records an unexpected error as a violation and returns the value.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.violations.push(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn finish(self, id: u8) -> CriterionOutcome {
        CriterionOutcome {
            id,
            title: CRITERIA[id as usize - 1].1,
            checks: self.checks,
            violations: self.violations,
            notes: self.notes,
        }
    }
}

fn raw(m: &Matroid) -> RawMatroid {
    RawMatroid::new(m.len(), m.circuits().to_vec())
}

fn raw_graph(g: &FiniteGraph) -> RawGraph {
    RawGraph {
        vertices: g.vertices().len(),
        edges: g.edges().iter().map(|e| (e.u, e.v)).collect(),
    }
}

fn sorted(mut v: Vec<ElemSet>) -> Vec<ElemSet> {
    v.sort_by(|a, b| a.lex_cmp(*b));
    v
}

fn show(m: &Matroid, s: ElemSet) -> String {
    format!("{{{}}}", m.labels(s).join(" "))
}

/// Corpus matroids accepted, mutated families rejected with the right axiom.
pub fn axiom_gate() -> CriterionOutcome {
    let mut t = Tally::new();
    for c in corpus() {
        let m = &c.matroid;
        let rebuilt = Matroid::from_circuits(m.ground(), m.circuit_labels());
        t.check(matches!(&rebuilt, Ok(r) if r == m), || format!("{} rejected: {:?}", c.name, rebuilt.err()));
        t.check(first_failing_axiom(m.len(), m.circuits()).is_none(), || {
            format!("{} fails the reference axiom check", c.name)
        });
    }
    for mu in mutations() {
        let got = Matroid::from_circuits(&mu.ground, &mu.circuits);
        let axiom = match &got {
            Err(Error::AxiomViolation { axiom, .. }) => Some(*axiom),
            _ => None,
        };
        t.check(axiom == Some(mu.expected), || {
            format!("{}: expected {} violation, got {:?}", mu.name, mu.expected, got.map(|m| m.to_string()))
        });
        let sets: Vec<ElemSet> = mu
            .circuits
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| mu.ground.iter().position(|g| g == l).expect("mutation labels in ground"))
                    .collect()
            })
            .collect();
        t.check(first_failing_axiom(mu.ground.len(), &sets) == Some(mu.expected), || {
            format!("{}: reference check disagrees on the failing axiom", mu.name)
        });
    }
    t.notes.push(format!("{} corpus matroids, {} mutations", corpus().len(), mutations().len()));
    t.finish(1)
}

fn check_bases_and_pairs(t: &mut Tally, c: &CorpusMatroid, oracle_cocircuits: &BTreeSet<ElemSet>) {
    let m = &c.matroid;
    let circuits: BTreeSet<ElemSet> = m.circuits().iter().copied().collect();
    for &base in m.bases() {
        for e in m.ground_set().difference(base).iter() {
            let Some(oe) = t.ok(m.fundamental_circuit(base, e), || format!("{} fundamental circuit", c.name)) else {
                continue;
            };
            t.check(circuits.contains(&oe) && oe.contains(e) && oe.is_subset(base.with(e)), || {
                format!("{}: bad fundamental circuit {} for base {}", c.name, show(m, oe), show(m, base))
            });
            for f in base.iter() {
                let Some(bf) = t.ok(m.fundamental_cocircuit(base, f), || format!("{} fundamental cocircuit", c.name))
                else {
                    continue;
                };
                let outside = m.ground_set().difference(base).with(f);
                t.check(oracle_cocircuits.contains(&bf) && bf.contains(f) && bf.is_subset(outside), || {
                    format!("{}: bad fundamental cocircuit {}", c.name, show(m, bf))
                });
                let meet = oe.intersection(bf);
                let pair = ElemSet::from_indices([e, f]);
                t.check(meet.is_empty() || meet == pair, || {
                    format!("{}: fundamental pair meets in {}", c.name, show(m, meet))
                });
                t.check(oe.contains(f) == bf.contains(e), || {
                    format!("{}: membership asymmetry for {} and {}", c.name, m.label(e), m.label(f))
                });
            }
        }
    }
    for &o in m.circuits() {
        for e in o.iter() {
            for f in o.iter().filter(|&f| f != e) {
                let Some(b) = t.ok(m.cocircuit_through_pair(o, e, f), || format!("{} cocircuit through pair", c.name))
                else {
                    continue;
                };
                t.check(oracle_cocircuits.contains(&b) && o.intersection(b) == ElemSet::from_indices([e, f]), || {
                    format!("{}: cocircuit {} through {} meets it wrongly", c.name, show(m, b), show(m, o))
                });
            }
        }
    }
}

fn minor_pairs(n: usize, rng: &mut impl Rng) -> Vec<(ElemSet, ElemSet)> {
    const EXHAUSTIVE_UP_TO: usize = 5;
    const SAMPLES: usize = 16;
    let split = |code: &[u8]| -> (ElemSet, ElemSet) {
        let c = (0..n).filter(|&i| code[i] == 1).collect();
        let d = (0..n).filter(|&i| code[i] == 2).collect();
        (c, d)
    };
    if n <= EXHAUSTIVE_UP_TO {
        let mut out = Vec::new();
        for mut k in 0..3usize.pow(n as u32) {
            let code: Vec<u8> = (0..n)
                .map(|_| {
                    let d = (k % 3) as u8;
                    k /= 3;
                    d
                })
                .collect();
            out.push(split(&code));
        }
        out
    } else {
        (0..SAMPLES)
            .map(|_| {
                let code: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                split(&code)
            })
            .collect()
    }
}

fn check_minors(t: &mut Tally, c: &CorpusMatroid, rng: &mut impl Rng) {
    const ORACLE_MINOR_LIMIT: usize = 7;
    let m = &c.matroid;
    let r = raw(m);
    for (k, (contract, delete)) in minor_pairs(m.len(), rng).into_iter().enumerate() {
        let Some(minor) = t.ok(m.minor(contract, delete), || format!("{} minor", c.name)) else {
            continue;
        };
        let lifted: Vec<ElemSet> = minor
            .circuits()
            .iter()
            .map(|&o| minor.transfer(o, m).expect("minor labels exist"))
            .collect();
        for &o in &lifted {
            t.check(
                m.circuits().iter().any(|&big| o.is_subset(big) && big.is_subset(o.union(contract))),
                || format!("{}: minor circuit {} does not lift", c.name, show(m, o)),
            );
        }
        if m.len() <= ORACLE_MINOR_LIMIT && k % 4 == 0 {
            t.check(sorted(lifted) == r.minor_circuits(contract, delete), || {
                format!(
                    "{}: minor by {} / {} differs from reference",
                    c.name,
                    show(m, contract),
                    show(m, delete)
                )
            });
        }
    }
}

fn check_scrawls(t: &mut Tally, c: &CorpusMatroid, r: &RawMatroid) {
    let m = &c.matroid;
    for w in m.ground_set().subsets() {
        let verdict = m.is_scrawl(w);
        let expected = r.is_scrawl(w);
        let sound = match &verdict {
            ScrawlVerdict::Scrawl(cover) => {
                cover.iter().all(|o| m.is_circuit(*o) && o.is_subset(w))
                    && cover.iter().fold(ElemSet::EMPTY, |a, o| a.union(*o)) == w
            }
            ScrawlVerdict::NotScrawl(b) => m.is_cocircuit(*b) && b.intersection(w).len() == 1,
        };
        t.check(verdict.is_scrawl() == expected && sound, || {
            format!("{}: scrawl verdict wrong on {}", c.name, show(m, w))
        });
    }
}

/// Fundamental circuit/cocircuit pairs, cocircuits through pairs, minor
/// lifting and scrawl recognition.
pub fn exchange_and_minor_checks(seed: u64) -> CriterionOutcome {
    let mut t = Tally::new();
    let mut rng = seeded_rng(seed);
    let mut count = 0;
    for c in corpus().iter().filter(|c| c.matroid.len() <= 8) {
        count += 1;
        let r = raw(&c.matroid);
        let co: BTreeSet<ElemSet> = r.cocircuits().into_iter().collect();
        let lib: BTreeSet<ElemSet> = c.matroid.cocircuits().iter().copied().collect();
        t.check(co == lib, || format!("{}: cocircuits differ from reference", c.name));
        check_bases_and_pairs(&mut t, c, &co);
        check_minors(&mut t, c, &mut rng);
        if c.matroid.len() <= 7 {
            check_scrawls(&mut t, c, &r);
        }
    }
    t.notes.push(format!("{count} matroids with at most 8 elements"));
    t.finish(2)
}

fn nondegenerate(m: &Matroid) -> Vec<usize> {
    (0..m.len()).filter(|&e| !m.is_loop(e) && !m.is_coloop(e)).collect()
}

fn rename(m: &Matroid, prefix: &str, shared: &[(usize, &str)]) -> Matroid {
    m.relabel(|l| {
        let i = m.index_of(l).expect("own label");
        match shared.iter().find(|(e, _)| *e == i) {
            Some((_, s)) => s.to_string(),
            None => format!("{prefix}{l}"),
        }
    })
    .expect("distinct labels")
}

fn label_family(m: &Matroid) -> BTreeSet<Vec<String>> {
    m.circuit_labels().into_iter().collect()
}

fn oracle_sum_labels(a: &Matroid, b: &Matroid, shared: &str) -> BTreeSet<Vec<String>> {
    let (ea, eb) = (a.index_of(shared).expect("shared"), b.index_of(shared).expect("shared"));
    let names: Vec<String> = a
        .ground()
        .iter()
        .chain(b.ground())
        .filter(|l| *l != shared)
        .cloned()
        .collect();
    two_sum_circuits(&raw(a), ea, &raw(b), eb)
        .into_iter()
        .map(|c| {
            let mut v: Vec<String> = c.iter().map(|i| names[i].clone()).collect();
            v.sort();
            v
        })
        .collect()
}

/// Orders that place every node next to an earlier one: one depth-first
/// order from each root.
fn rooted_orders(tree: &MatroidTree) -> Vec<Vec<usize>> {
    let n = tree.nodes().len();
    let mut adj = vec![Vec::new(); n];
    for e in tree.edges() {
        adj[e.a].push(e.b);
        adj[e.b].push(e.a);
    }
    (0..n)
        .map(|root| {
            let mut order = Vec::new();
            let mut stack = vec![root];
            let mut seen = vec![false; n];
            while let Some(v) = stack.pop() {
                if std::mem::replace(&mut seen[v], true) {
                    continue;
                }
                order.push(v);
                stack.extend(adj[v].iter().rev().copied());
            }
            order
        })
        .collect()
}

/// Node sequence and shared labels of a path-shaped tree.
fn path_sequence(tree: &MatroidTree) -> Option<(Vec<Matroid>, Vec<String>)> {
    let n = tree.nodes().len();
    let mut deg = vec![0; n];
    for e in tree.edges() {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    if deg.iter().any(|&d| d > 2) {
        return None;
    }
    let start = (0..n).find(|&v| deg[v] <= 1)?;
    let mut parts = vec![tree.nodes()[start].matroid.clone()];
    let mut shared = Vec::new();
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(e) = tree.edges().iter().find(|e| (e.a == cur || e.b == cur) && e.a != prev && e.b != prev) {
        let next = if e.a == cur { e.b } else { e.a };
        parts.push(tree.nodes()[next].matroid.clone());
        shared.push(e.dummy.clone());
        (prev, cur) = (cur, next);
    }
    Some((parts, shared))
}

pub fn two_sum_algebra(seed: u64) -> CriterionOutcome {
    const TRIPLES: usize = 100;
    let mut t = Tally::new();
    let tri = |l: [&str; 3]| Matroid::uniform(2, l).expect("triangle");
    let (l, r) = (tri(["a", "b", "e"]), tri(["e", "c", "d"]));
    if let Some(s) = t.ok(two_sum(&SharedEdgeWitness::new(&l, &r, "e")), || "two triangles".into()) {
        let u34 = Matroid::uniform(3, ["a", "b", "c", "d"]).expect("U34");
        t.check(s == u34 && label_family(&s) == oracle_sum_labels(&l, &r, "e"), || {
            "two triangles do not give U(3,4)".into()
        });
    }
    let chain = [tri(["a", "b", "x"]), tri(["x", "c", "y"]), tri(["y", "d", "f"])];
    if let Some(s) = t.ok(fold_two_sums(&chain, &["x".into(), "y".into()]), || "triangle chain".into()) {
        t.check(s == Matroid::uniform(4, ["a", "b", "c", "d", "f"]).expect("U45"), || {
            "three-triangle chain is not U(4,5)".into()
        });
    }

    let pool: Vec<&Matroid> = corpus()
        .iter()
        .map(|c| &c.matroid)
        .filter(|m| (3..=5).contains(&m.len()) && !nondegenerate(m).is_empty())
        .collect();
    let middles: Vec<&Matroid> = pool.iter().copied().filter(|m| nondegenerate(m).len() >= 2).collect();
    let mut rng = seeded_rng(seed ^ 0x2_5u64);
    for k in 0..TRIPLES {
        let (a, b, c) = (
            pool[rng.gen_range(0..pool.len())],
            middles[rng.gen_range(0..middles.len())],
            pool[rng.gen_range(0..pool.len())],
        );
        let pick = |m: &Matroid, rng: &mut rand_chacha::ChaCha8Rng| {
            let nd = nondegenerate(m);
            nd[rng.gen_range(0..nd.len())]
        };
        let ea = pick(a, &mut rng);
        let nb = nondegenerate(b);
        let i = rng.gen_range(0..nb.len());
        let j = (i + 1 + rng.gen_range(0..nb.len() - 1)) % nb.len();
        let ec = pick(c, &mut rng);
        let m1 = rename(a, "x", &[(ea, "s1")]);
        let m2 = rename(b, "y", &[(nb[i], "s1"), (nb[j], "s2")]);
        let m3 = rename(c, "z", &[(ec, "s2")]);
        let left = two_sum(&SharedEdgeWitness::new(&m1, &m2, "s1"))
            .and_then(|x| two_sum(&SharedEdgeWitness::new(&x, &m3, "s2")));
        let right = two_sum(&SharedEdgeWitness::new(&m2, &m3, "s2"))
            .and_then(|y| two_sum(&SharedEdgeWitness::new(&m1, &y, "s1")));
        if let (Some(x), Some(y)) = (
            t.ok(left, || format!("triple {k} left association")),
            t.ok(right, || format!("triple {k} right association")),
        ) {
            t.check(x == y, || format!("triple {k}: associations differ"));
        }
        if let Some(s12) = t.ok(two_sum(&SharedEdgeWitness::new(&m1, &m2, "s1")), || format!("triple {k} pair")) {
            t.check(label_family(&s12) == oracle_sum_labels(&m1, &m2, "s1"), || {
                format!("triple {k}: 2-sum differs from the rank-formula reference")
            });
            let dual_sum = two_sum(&SharedEdgeWitness::new(&m1.dual(), &m2.dual(), "s1"));
            t.check(matches!(&dual_sum, Ok(d) if *d == s12.dual()), || {
                format!("triple {k}: dual does not exchange with the 2-sum")
            });
        }
    }

    for (name, tree) in corpus_trees() {
        let Some(glued) = t.ok(tree.glue(), || format!("{name}: glue")) else {
            continue;
        };
        for order in rooted_orders(tree) {
            let by_sums = tree.glue_by_two_sums(&order);
            t.check(matches!(&by_sums, Ok(m) if *m == glued), || {
                format!("{name}: glue differs from 2-sums in order {order:?}")
            });
        }
        if let Some((parts, shared)) = path_sequence(tree) {
            let folded = fold_two_sums(&parts, &shared);
            t.check(matches!(&folded, Ok(m) if *m == glued), || format!("{name}: glue differs from the fold"));
        }
    }
    t.notes.push(format!("{TRIPLES} seeded triples, {} corpus trees", corpus_trees().len()));
    t.finish(3)
}

pub fn trees_never_meet_once() -> CriterionOutcome {
    let mut t = Tally::new();
    for (name, tree) in corpus_trees() {
        if let Some(r) = t.ok(tree.check_never_meet_once(), || name.clone()) {
            t.check(true, String::new);
            t.notes.push(format!("{name}: {} pairs, max meet {}", r.pairs_checked, r.max_intersection));
        }
    }
    let q = q_ray();
    for d in 1..=6 {
        if let Some(u) = t.ok(q.unroll(d), || format!("q ray window {d}")) {
            if t.ok(u.tree.check_never_meet_once(), || format!("q ray truncated window {d}")).is_some() {
                t.check(true, String::new);
            }
        }
        if let Some(r) = t.ok(q.check_window_never_meet_once(d), || format!("q ray window {d}")) {
            t.check(true, String::new);
            t.notes.push(format!("q ray window {d}: {} pairs, max meet {}", r.pairs_checked, r.max_intersection));
        }
    }
    t.finish(4)
}

pub fn decomposition_checks() -> CriterionOutcome {
    const UNIQUENESS_LIMIT: usize = 6;
    let mut t = Tally::new();
    let mut unique = 0;
    for c in corpus().iter().filter(|c| c.matroid.len() <= 9 && c.matroid.is_connected()) {
        let m = &c.matroid;
        let Some(cd) = t.ok(canonical_decompose(m), || format!("{}: decompose", c.name)) else {
            continue;
        };
        let d = &cd.decomposition;
        t.check(d.validate(m).is_ok(), || format!("{}: decomposition does not validate", c.name));
        if m.len() >= 3 {
            for v in 0..d.node_count() {
                let tv = torso(m, d, v);
                let ok = matches!(&tv, Ok(tm) if *tm == cd.torsos[v] && tm.len() >= 3
                    && classify(tm).is_some() && classify(tm) == cd.kinds[v]);
                t.check(ok, || format!("{}: torso at node {v} is malformed", c.name));
            }
            for &(a, b) in &d.edges {
                let same = cd.kinds[a] == cd.kinds[b]
                    && matches!(cd.kinds[a], Some(TorsoKind::Circuit) | Some(TorsoKind::Cocircuit));
                t.check(!same, || format!("{}: adjacent torsos {a} and {b} are both {:?}", c.name, cd.kinds[a]));
            }
        }
        if let Some(rt) = t.ok(roundtrip(m), || format!("{}: round trip", c.name)) {
            t.check(rt.identity, || format!("{}: round trip changes the circuits", c.name));
        }
        if m.len() <= UNIQUENESS_LIMIT
            && t.ok(verify_canonical(m, d), || format!("{}: uniqueness", c.name)).is_some()
        {
            unique += 1;
            t.check(true, String::new);
        }
    }
    t.notes.push(format!("{unique} decompositions confirmed unique"));
    t.finish(5)
}

pub fn ray_results() -> CriterionOutcome {
    let mut t = Tally::new();
    let c4 = c4_ray();
    t.check(c4.is_nice().is_err(), || "c4 ray reported nice".into());
    for d in 1..=10 {
        if let Some(w) = t.ok(c4.finite_circuits(d), || format!("c4 window {d}")) {
            t.check(w.finite.is_empty(), || format!("c4 window {d} has circuits"));
        }
        t.check(matches!(c4.psi_matroids_of_ray(d), Err(Error::NotNice(_))), || {
            format!("c4 window {d}: gluings computed for a non-nice ray")
        });
    }
    let q = q_ray();
    t.check(q.is_nice().is_ok(), || format!("q ray not nice: {:?}", q.is_nice()));
    t.check(!q.periodic_circuits().is_empty(), || "q ray has no periodic circuits".into());
    for d in 1..=6 {
        if let Some(p) = t.ok(q.psi_matroids_of_ray(d), || format!("q ray gluings at {d}")) {
            if d >= 2 {
                t.check(p.differ, || format!("q ray window {d}: gluings agree"));
            }
        }
        if let Some(r) = t.ok(q.tameness_report(d), || format!("q ray tameness at {d}")) {
            let both = |g: crate::ray::EndUse| g.circuits && g.cocircuits;
            t.check(!r.shared_end && !both(r.empty_gluing) && !both(r.omega_gluing), || {
                format!("q ray window {d}: a gluing has periodic circuits and cocircuits")
            });
            t.check(r.omega_gluing.circuits && r.empty_gluing.cocircuits, || {
                format!("q ray window {d}: the end is never used")
            });
        }
    }
    t.finish(6)
}

fn check_shortcut(t: &mut Tally, name: &str, g: &FiniteGraph, spec: &OrientedArcSpec, avoid: ElemSet) {
    let Some(sc) = t.ok(g.shortcut_path(spec, avoid), || format!("{name}: shortcut")) else {
        return;
    };
    let p = &sc.path;
    let ends: BTreeSet<usize> = [p.start(), p.end()].into();
    t.check(g.is_path(p) && ends == BTreeSet::from([spec.v, spec.w]), || {
        format!("{name}: not a path between the arc ends")
    });
    let pv: ElemSet = p.vertices.iter().copied().collect();
    t.check(pv.is_disjoint(avoid), || format!("{name}: path meets the avoided vertices"));
    if spec.v == spec.w {
        t.check(p.edges.is_empty() && sc.bond.is_none(), || format!("{name}: trivial case not trivial"));
        return;
    }
    let Some(arc) = t.ok(g.arc(spec), || format!("{name}: arc")) else {
        return;
    };
    let interior: ElemSet = arc.vertices[1..arc.vertices.len() - 1].iter().copied().collect();
    t.check(pv.is_disjoint(interior), || format!("{name}: path enters the arc interior"));
    if arc.edges.len() < 2 {
        t.check(p.edge_set() == arc.edge_set() && sc.bond.is_none(), || {
            format!("{name}: single-edge arc not used as the path")
        });
        return;
    }
    t.check(p.edge_set().is_disjoint(arc.edge_set()), || format!("{name}: path uses arc edges"));
    let opposite = OrientedArcSpec {
        circle: spec.circle,
        v: spec.w,
        w: spec.v,
        forward: spec.forward,
    };
    let Some(opp) = t.ok(g.arc(&opposite), || format!("{name}: opposite arc")) else {
        return;
    };
    let outer: ElemSet = pv.union(opp.vertices.iter().copied().collect());
    match &sc.bond {
        None => t.check(false, || format!("{name}: missing bond")),
        Some(b) => {
            let bonds = raw_graph(g).bonds();
            t.check(bonds.contains(&b.edges) && g.cut(b.inner_side) == b.edges, || {
                format!("{name}: returned edges are not the bond of the side")
            });
            t.check(interior.is_subset(b.inner_side) && b.inner_side.is_disjoint(outer), || {
                format!("{name}: bond sides are wrong")
            });
        }
    }
}

pub fn graph_side(seed: u64) -> CriterionOutcome {
    const SHORTCUT_INSTANCES: usize = 50;
    let mut t = Tally::new();
    for (name, g) in corpus_graphs() {
        let m = g.cycle_matroid();
        let rg = raw_graph(g);
        t.check(g.cycles() == m.circuits() && rg.cycles() == m.circuits(), || {
            format!("{name}: cycles differ from circuits")
        });
        let bonds = sorted(g.bonds());
        let co = sorted(m.cocircuits().to_vec());
        t.check(bonds == co && rg.bonds() == co, || format!("{name}: bonds differ from cocircuits"));
    }
    let cyclic: Vec<&(String, FiniteGraph)> = corpus_graphs().iter().filter(|(_, g)| !g.cycles().is_empty()).collect();
    let mut rng = seeded_rng(seed ^ 0x5_2u64);
    for k in 0..SHORTCUT_INSTANCES {
        let (name, g) = cyclic[rng.gen_range(0..cyclic.len())];
        let cycles = g.cycles();
        let circle = cycles[rng.gen_range(0..cycles.len())];
        let on: Vec<usize> = g.vertices_of(circle).iter().collect();
        let spec = OrientedArcSpec {
            circle,
            v: on[rng.gen_range(0..on.len())],
            w: on[rng.gen_range(0..on.len())],
            forward: rng.gen_bool(0.5),
        };
        let avoid: ElemSet = g
            .all_vertices()
            .difference(g.vertices_of(circle))
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        check_shortcut(&mut t, &format!("instance {k} on {name}"), g, &spec, avoid);
    }
    let lg = ladder();
    for psi in [Psi::Empty, Psi::End] {
        for d in 1..=6 {
            if let Some(r) = t.ok(check_never_meet_once_graph(&lg, psi, d), || format!("ladder {psi:?} {d}")) {
                t.check(true, String::new);
                t.notes.push(format!(
                    "ladder {psi:?} depth {d}: {} circuits, {} bonds, max meet {}",
                    r.circuits, r.bonds, r.max_finite_intersection
                ));
            }
            if t.ok(end_disjointness_report(&lg, psi, d), || format!("ladder {psi:?} {d} ends")).is_some() {
                t.check(true, String::new);
            }
        }
    }
    t.finish(7)
}

pub fn finitarisation_and_minors() -> CriterionOutcome {
    let mut t = Tally::new();
    let q = q_ray();
    for d in 1..=6 {
        if let Some(r) = t.ok(q.finitarisation_check(d), || format!("q ray finitarisation at {d}")) {
            t.check(r.circuits_identity && r.cocircuits_identity, || format!("q ray window {d}: identity fails"));
        }
    }
    for c in corpus().iter().filter(|c| c.graph.is_some()) {
        t.check(!c.matroid.has_uniform_minor(2, 4), || format!("{}: graphic but has a U(2,4) minor", c.name));
    }
    let u24 = Matroid::uniform_n(2, 4).expect("U24");
    t.check(u24.has_uniform_minor(2, 4), || "U(2,4) misses itself".into());
    t.finish(8)
}

/// Criteria 1 to 8, in order.
pub fn property_criteria(cfg: SuiteConfig) -> Vec<CriterionOutcome> {
    vec![
        axiom_gate(),
        exchange_and_minor_checks(cfg.seed),
        two_sum_algebra(cfg.seed),
        trees_never_meet_once(),
        decomposition_checks(),
        ray_results(),
        graph_side(cfg.seed),
        finitarisation_and_minors(),
    ]
}

/// Compares two renderings of the same report.
pub fn determinism(first: &str, second: &str) -> CriterionOutcome {
    let mut t = Tally::new();
    t.check(first == second, || {
        let line = first
            .lines()
            .zip(second.lines())
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| first.lines().count().min(second.lines().count()));
        format!("reports first differ at line {}", line + 1)
    });
    t.finish(9)
}

/// Runs criteria 1 to 8 twice and adds the comparison as criterion 9.
pub fn run_suite(cfg: SuiteConfig) -> SuiteReport {
    let first = property_criteria(cfg);
    let second = property_criteria(cfg);
    let render = |v: &[CriterionOutcome]| v.iter().map(|o| o.render(true)).collect::<String>();
    let mut outcomes = first.clone();
    outcomes.push(determinism(&render(&first), &render(&second)));
    SuiteReport {
        seed: cfg.seed,
        outcomes,
    }
}
