//! Finite matroids given by their circuit family.
//!
//! The circuit family is the canonical representation. Bases, rank and
//! cocircuits are derived on demand and cached.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Axiom, Error, Result};
use crate::set::{canonical_family, minimal_members, ElemSet, MAX_ELEMENTS};

/// Ground-set cap for brute-force scans, read from `MATROID_FORGE_MAX_E`.
pub fn brute_force_limit() -> usize {
    std::env::var("MATROID_FORGE_MAX_E")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(12)
}

#[derive(Clone, Default)]
struct Derived {
    rank: OnceLock<usize>,
    bases: OnceLock<Vec<ElemSet>>,
    cocircuits: OnceLock<Vec<ElemSet>>,
}

/// A finite matroid on a sorted ground set of string labels.
#[derive(Clone)]
pub struct Matroid {
    ground: Vec<String>,
    index: BTreeMap<String, usize>,
    circuits: Vec<ElemSet>,
    derived: Derived,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field(
                "circuits",
                &self
                    .circuits
                    .iter()
                    .map(|c| self.labels(*c))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A partition of the ground set together with its order `λ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separation {
    pub side_a: ElemSet,
    pub side_b: ElemSet,
    pub order: usize,
}

/// Outcome of [`Matroid::is_scrawl`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScrawlVerdict {
    /// The set is a union of the listed circuits.
    Scrawl(Vec<ElemSet>),
    /// The listed cocircuit meets the set in exactly one element.
    NotScrawl(ElemSet),
}

impl ScrawlVerdict {
    pub fn is_scrawl(&self) -> bool {
        matches!(self, ScrawlVerdict::Scrawl(_))
    }
}

fn sorted_ground<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Result<Vec<String>> {
    let mut seen = BTreeSet::new();
    for l in labels {
        let l = l.as_ref().to_string();
        if !seen.insert(l.clone()) {
            return Err(Error::DuplicateElement(l));
        }
    }
    if seen.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(seen.len()));
    }
    Ok(seen.into_iter().collect())
}

fn build_index(ground: &[String]) -> BTreeMap<String, usize> {
    ground
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect()
}

/// Checks the circuit axioms on an indexed family over `n` elements.
///
/// The family must already be deduplicated. Returns the violated axiom and a
/// witness expressed with element indices.
pub(crate) fn check_circuit_axioms(
    n: usize,
    circuits: &[ElemSet],
    check_bases: bool,
) -> std::result::Result<(), (Axiom, Vec<ElemSet>)> {
    if circuits.iter().any(|c| c.is_empty()) {
        return Err((Axiom::C1, vec![ElemSet::EMPTY]));
    }
    for (i, a) in circuits.iter().enumerate() {
        for (j, b) in circuits.iter().enumerate() {
            if i != j && a.is_subset(*b) {
                return Err((Axiom::C2, vec![*a, *b]));
            }
        }
    }
    for a in circuits {
        for b in circuits {
            let shared = a.intersection(*b);
            if a == b || shared.is_empty() {
                continue;
            }
            let keep = a.difference(*b);
            for x in shared.iter() {
                let region = a.union(*b).without(x);
                let cover = circuits
                    .iter()
                    .filter(|c| c.is_subset(region))
                    .fold(ElemSet::EMPTY, |acc, c| acc.union(*c));
                if let Some(z) = keep.difference(cover).first() {
                    return Err((
                        Axiom::C3,
                        vec![*a, *b, ElemSet::singleton(x), ElemSet::singleton(z)],
                    ));
                }
            }
        }
    }
    if check_bases {
        let maximal = maximal_independent_sets(n, circuits);
        if let (Some(lo), Some(hi)) = (
            maximal.iter().min_by_key(|s| s.len()),
            maximal.iter().max_by_key(|s| s.len()),
        ) {
            if lo.len() != hi.len() {
                return Err((Axiom::Bases, vec![*lo, *hi]));
            }
        }
    }
    Ok(())
}

fn is_independent_in(circuits: &[ElemSet], set: ElemSet) -> bool {
    !circuits.iter().any(|c| c.is_subset(set))
}

/// All maximal circuit-free subsets, by depth-first growth over indices.
fn maximal_independent_sets(n: usize, circuits: &[ElemSet]) -> Vec<ElemSet> {
    fn grow(
        n: usize,
        circuits: &[ElemSet],
        next: usize,
        cur: ElemSet,
        out: &mut Vec<ElemSet>,
    ) {
        if next == n {
            let maximal =
                (0..n).all(|e| cur.contains(e) || !is_independent_in(circuits, cur.with(e)));
            if maximal {
                out.push(cur);
            }
            return;
        }
        let with = cur.with(next);
        if is_independent_in(circuits, with) {
            grow(n, circuits, next + 1, with, out);
        }
        grow(n, circuits, next + 1, cur, out);
    }
    let mut out = Vec::new();
    grow(n, circuits, 0, ElemSet::EMPTY, &mut out);
    out
}

impl Matroid {
    /// Builds and validates a matroid from labelled circuits.
    pub fn from_circuits<S, C, I>(ground: I, circuits: C) -> Result<Matroid>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = S>,
        C: IntoIterator,
        C::Item: IntoIterator,
        <C::Item as IntoIterator>::Item: AsRef<str>,
    {
        let ground = sorted_ground(ground)?;
        let index = build_index(&ground);
        let mut sets = Vec::new();
        for c in circuits {
            let mut s = ElemSet::EMPTY;
            for l in c {
                let l = l.as_ref();
                let i = *index
                    .get(l)
                    .ok_or_else(|| Error::UnknownElement(l.to_string()))?;
                s = s.with(i);
            }
            sets.push(s);
        }
        Self::from_sets(ground, sets)
    }

    /// Validates an index-level circuit family over an already sorted ground.
    pub(crate) fn from_sets(ground: Vec<String>, circuits: Vec<ElemSet>) -> Result<Matroid> {
        let m = Self::from_sets_unchecked(ground, circuits)?;
        let check_bases = m.len() <= brute_force_limit();
        if let Err((axiom, witness)) = check_circuit_axioms(m.len(), &m.circuits, check_bases) {
            return Err(Error::AxiomViolation {
                axiom,
                witness: m.describe_witness(axiom, &witness),
            });
        }
        Ok(m)
    }

    /// Builds a matroid without running the axiom checks. The caller
    /// guarantees that `circuits` is a valid circuit family.
    pub(crate) fn from_sets_unchecked(ground: Vec<String>, circuits: Vec<ElemSet>) -> Result<Matroid> {
        if ground.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(ground.len()));
        }
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        let index = build_index(&ground);
        Ok(Matroid {
            ground,
            index,
            circuits: canonical_family(circuits),
            derived: Derived::default(),
        })
    }

    /// The uniform matroid `U_{r,n}` on the given labels.
    pub fn uniform<S: AsRef<str>>(rank: usize, labels: impl IntoIterator<Item = S>) -> Result<Matroid> {
        let ground = sorted_ground(labels)?;
        let n = ground.len();
        if rank > n {
            return Err(Error::PreconditionViolated(format!(
                "rank {rank} exceeds {n} elements"
            )));
        }
        let circuits = if rank == n {
            Vec::new()
        } else {
            ElemSet::full(n)
                .subsets()
                .filter(|s| s.len() == rank + 1)
                .collect()
        };
        let m = Self::from_sets_unchecked(ground, circuits)?;
        m.derived.rank.get_or_init(|| rank);
        Ok(m)
    }

    /// `U_{r,n}` on labels `a, b, c, ...`.
    pub fn uniform_n(rank: usize, n: usize) -> Result<Matroid> {
        Self::uniform(rank, default_labels(n))
    }

    /// The matroid with no elements.
    pub fn empty() -> Matroid {
        Self::from_sets_unchecked(Vec::new(), Vec::new()).expect("empty ground")
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn ground_set(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.ground[i]
    }

    pub fn labels(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.ground[i].clone()).collect()
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<ElemSet> {
        let mut s = ElemSet::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    /// Circuits as sorted label lists, in canonical order.
    pub fn circuit_labels(&self) -> Vec<Vec<String>> {
        self.circuits.iter().map(|c| self.labels(*c)).collect()
    }

    pub fn cocircuit_labels(&self) -> Vec<Vec<String>> {
        self.cocircuits().iter().map(|c| self.labels(*c)).collect()
    }

    pub fn is_circuit(&self, set: ElemSet) -> bool {
        self.circuits.binary_search_by(|c| c.lex_cmp(set)).is_ok()
    }

    pub fn is_cocircuit(&self, set: ElemSet) -> bool {
        self.cocircuits()
            .binary_search_by(|c| c.lex_cmp(set))
            .is_ok()
    }

    pub fn is_independent(&self, set: ElemSet) -> bool {
        is_independent_in(&self.circuits, set)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.is_circuit(ElemSet::singleton(e))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        !self.circuits.iter().any(|c| c.contains(e))
    }

    /// A maximal independent subset of `x`, grown greedily in index order.
    pub fn greedy_basis_of(&self, x: ElemSet) -> ElemSet {
        self.extend_independent(ElemSet::EMPTY, x)
    }

    /// Extends the independent set `start` greedily using elements of `pool`.
    pub fn extend_independent(&self, start: ElemSet, pool: ElemSet) -> ElemSet {
        debug_assert!(self.is_independent(start));
        let mut ind = start;
        for e in pool.difference(start).iter() {
            let cand = ind.with(e);
            if self.is_independent(cand) {
                ind = cand;
            }
        }
        ind
    }

    pub fn rank_of(&self, x: ElemSet) -> usize {
        self.greedy_basis_of(x).len()
    }

    pub fn rank(&self) -> usize {
        *self
            .derived
            .rank
            .get_or_init(|| self.rank_of(self.ground_set()))
    }

    /// Connectivity `r(A) + r(E - A) - r(E)`.
    pub fn connectivity(&self, side: ElemSet) -> usize {
        let other = self.ground_set().difference(side);
        self.rank_of(side) + self.rank_of(other) - self.rank()
    }

    pub fn is_base(&self, set: ElemSet) -> bool {
        set.is_subset(self.ground_set()) && set.len() == self.rank() && self.is_independent(set)
    }

    /// All bases in canonical order.
    pub fn bases(&self) -> &[ElemSet] {
        self.derived.bases.get_or_init(|| {
            let n = self.len();
            let r = self.rank();
            let mut out = Vec::new();
            let mut stack = vec![(0usize, ElemSet::EMPTY)];
            while let Some((next, cur)) = stack.pop() {
                if cur.len() == r {
                    out.push(cur);
                    continue;
                }
                if next == n || cur.len() + (n - next) < r {
                    continue;
                }
                stack.push((next + 1, cur));
                let with = cur.with(next);
                if self.is_independent(with) {
                    stack.push((next + 1, with));
                }
            }
            canonical_family(out)
        })
    }

    /// All cocircuits in canonical order, collected as fundamental cocircuits
    /// over every base.
    pub fn cocircuits(&self) -> &[ElemSet] {
        self.derived.cocircuits.get_or_init(|| {
            let mut found = BTreeSet::new();
            for &base in self.bases() {
                for f in base.iter() {
                    found.insert(self.fundamental_cocircuit_unchecked(base, f));
                }
            }
            canonical_family(found.into_iter().collect())
        })
    }

    fn fundamental_cocircuit_unchecked(&self, base: ElemSet, f: usize) -> ElemSet {
        let rest = base.without(f);
        self.ground_set()
            .difference(base)
            .iter()
            .filter(|&e| self.is_independent(rest.with(e)))
            .fold(ElemSet::singleton(f), |acc, e| acc.with(e))
    }

    /// The dual matroid.
    pub fn dual(&self) -> Matroid {
        let d = Self::from_sets_unchecked(self.ground.clone(), self.cocircuits().to_vec())
            .expect("same ground");
        let _ = d.derived.cocircuits.set(self.circuits.clone());
        let _ = d.derived.rank.set(self.len() - self.rank());
        d
    }

    /// `M / contract \ delete`.
    pub fn minor(&self, contract: ElemSet, delete: ElemSet) -> Result<Matroid> {
        let overlap = contract.intersection(delete);
        if !overlap.is_empty() {
            return Err(Error::OverlappingSets(self.labels(overlap)));
        }
        let removed = contract.union(delete);
        let kept = self.ground_set().difference(removed);
        let mapping = index_mapping(self.len(), kept);
        let raw: Vec<ElemSet> = self
            .circuits
            .iter()
            .filter(|o| o.is_disjoint(delete))
            .map(|o| o.difference(contract))
            .collect();
        let minimal = minimal_members(raw);
        #[cfg(debug_assertions)]
        for c in &minimal {
            // every minor circuit lifts to a circuit inside c ∪ contract
            debug_assert!(self
                .circuits
                .iter()
                .any(|o| c.is_subset(*o) && o.is_subset(c.union(contract))));
        }
        let circuits = minimal.into_iter().map(|c| remap(c, &mapping)).collect();
        let ground = kept.iter().map(|i| self.ground[i].clone()).collect();
        Self::from_sets_unchecked(ground, circuits)
    }

    pub fn minor_by_labels<S: AsRef<str>>(
        &self,
        contract: impl IntoIterator<Item = S>,
        delete: impl IntoIterator<Item = S>,
    ) -> Result<Matroid> {
        let c = self.set_of(contract)?;
        let d = self.set_of(delete)?;
        self.minor(c, d)
    }

    pub fn delete(&self, set: ElemSet) -> Matroid {
        self.minor(ElemSet::EMPTY, set).expect("disjoint")
    }

    pub fn contract(&self, set: ElemSet) -> Matroid {
        self.minor(set, ElemSet::EMPTY).expect("disjoint")
    }

    /// The restriction `M | keep`.
    pub fn restrict(&self, keep: ElemSet) -> Matroid {
        self.delete(self.ground_set().difference(keep))
    }

    fn require_base(&self, base: ElemSet) -> Result<()> {
        if !self.is_base(base) {
            return Err(Error::NotABase(self.labels(base)));
        }
        Ok(())
    }

    /// The unique circuit inside `base + e` that contains `e`.
    pub fn fundamental_circuit(&self, base: ElemSet, e: usize) -> Result<ElemSet> {
        self.require_base(base)?;
        if e >= self.len() || base.contains(e) {
            return Err(Error::ElementPositionInvalid(self.label_or_index(e)));
        }
        let region = base.with(e);
        self.circuits
            .iter()
            .copied()
            .find(|c| c.contains(e) && c.is_subset(region))
            .ok_or_else(|| Error::AssertionFailure("base plus element contains no circuit".into()))
    }

    /// The unique cocircuit inside `(E - base) + f` that contains `f`.
    pub fn fundamental_cocircuit(&self, base: ElemSet, f: usize) -> Result<ElemSet> {
        self.require_base(base)?;
        if f >= self.len() || !base.contains(f) {
            return Err(Error::ElementPositionInvalid(self.label_or_index(f)));
        }
        Ok(self.fundamental_cocircuit_unchecked(base, f))
    }

    fn label_or_index(&self, i: usize) -> String {
        self.ground.get(i).cloned().unwrap_or_else(|| format!("#{i}"))
    }

    /// A cocircuit meeting the circuit `o` in exactly `{e, f}`.
    pub fn cocircuit_through_pair(&self, o: ElemSet, e: usize, f: usize) -> Result<ElemSet> {
        if !self.is_circuit(o) {
            return Err(Error::PreconditionViolated(format!(
                "{:?} is not a circuit",
                self.labels(o)
            )));
        }
        if e == f || !o.contains(e) || !o.contains(f) {
            return Err(Error::PreconditionViolated(
                "e and f must be distinct elements of the circuit".into(),
            ));
        }
        let base = self.extend_independent(o.without(e), self.ground_set());
        let b = self.fundamental_cocircuit_unchecked(base, f);
        if o.intersection(b) != ElemSet::from_indices([e, f]) {
            return Err(Error::AssertionFailure(format!(
                "cocircuit {:?} meets {:?} outside the pair",
                self.labels(b),
                self.labels(o)
            )));
        }
        Ok(b)
    }

    /// Decides whether `w` is a union of circuits by looking for a cocircuit
    /// that meets it exactly once.
    pub fn is_scrawl(&self, w: ElemSet) -> ScrawlVerdict {
        if let Some(&b) = self
            .cocircuits()
            .iter()
            .find(|b| b.intersection(w).len() == 1)
        {
            return ScrawlVerdict::NotScrawl(b);
        }
        let mut cover = Vec::new();
        let mut covered = ElemSet::EMPTY;
        for e in w.iter() {
            if covered.contains(e) {
                continue;
            }
            let c = self
                .circuits
                .iter()
                .copied()
                .find(|c| c.contains(e) && c.is_subset(w))
                .expect("a set meeting no cocircuit once is covered by circuits");
            covered = covered.union(c);
            cover.push(c);
        }
        ScrawlVerdict::Scrawl(canonical_family(cover))
    }

    /// Circuit elimination: a circuit containing `z` inside `(o ∪ o2) - x`.
    pub fn circuit_eliminate(&self, o: ElemSet, o2: ElemSet, x: usize, z: usize) -> Result<ElemSet> {
        if !self.is_circuit(o) || !self.is_circuit(o2) {
            return Err(Error::PreconditionViolated("operands must be circuits".into()));
        }
        if !o.intersection(o2).contains(x) {
            return Err(Error::PreconditionViolated(
                "eliminated element must lie in both circuits".into(),
            ));
        }
        if !o.difference(o2).contains(z) {
            return Err(Error::PreconditionViolated(
                "kept element must lie in the first circuit only".into(),
            ));
        }
        let region = o.union(o2).without(x);
        self.circuits
            .iter()
            .copied()
            .find(|c| c.contains(z) && c.is_subset(region))
            .ok_or_else(|| Error::AssertionFailure("elimination failed".into()))
    }

    /// Connected components (classes of the common-circuit relation).
    pub fn components(&self) -> Vec<ElemSet> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for c in &self.circuits {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut comps: BTreeMap<usize, ElemSet> = BTreeMap::new();
        for e in 0..n {
            let r = find(&mut parent, e);
            let slot = comps.entry(r).or_default();
            *slot = slot.with(e);
        }
        canonical_family(comps.into_values().collect())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All partitions `(A, B)` with `|A|, |B| >= 2` and `λ(A) <= 1`. The side
    /// containing the first element is reported as `side_a`.
    pub fn two_separations(&self) -> Vec<Separation> {
        let n = self.len();
        if n < 4 {
            return Vec::new();
        }
        let all = self.ground_set();
        let rest = all.without(0);
        let mut out = Vec::new();
        for s in rest.subsets() {
            let a = s.with(0);
            let b = all.difference(a);
            if a.len() < 2 || b.len() < 2 {
                continue;
            }
            let lambda = self.connectivity(a);
            if lambda <= 1 {
                out.push(Separation {
                    side_a: a,
                    side_b: b,
                    order: lambda + 1,
                });
            }
        }
        out.sort_by(|x, y| x.side_a.lex_cmp(y.side_a));
        out
    }

    /// Connected, at least four elements and no 2-separation.
    pub fn is_three_connected(&self) -> bool {
        self.len() >= 4 && self.is_connected() && self.two_separations().is_empty()
    }

    /// Whether the circuit family is exactly that of `U_{r,n}` on this ground.
    pub fn is_uniform(&self, r: usize) -> bool {
        let n = self.len();
        if r > n {
            return false;
        }
        if r == n {
            return self.circuits.is_empty();
        }
        self.circuits.iter().all(|c| c.len() == r + 1) && self.circuits.len() == binomial(n, r + 1)
    }

    /// Whether some minor of `M` is isomorphic to `U_{r,n}`.
    pub fn has_uniform_minor(&self, r: usize, n: usize) -> bool {
        if n > self.len() || r > n {
            return false;
        }
        let all = self.ground_set();
        for keep in all.subsets().filter(|s| s.len() == n) {
            let outside = all.difference(keep);
            for contract in outside.subsets() {
                // an independent contraction set suffices for every minor
                if !self.is_independent(contract) {
                    continue;
                }
                let rank = self.rank_of(keep.union(contract)) - contract.len();
                if rank != r {
                    continue;
                }
                let delete = outside.difference(contract);
                let minor = self.minor(contract, delete).expect("disjoint");
                if minor.is_uniform(r) {
                    return true;
                }
            }
        }
        false
    }

    /// Applies `f` to every label. Fails if two labels collide.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Matroid> {
        let new_labels: Vec<String> = self.ground.iter().map(|l| f(l)).collect();
        let ground = sorted_ground(new_labels.iter())?;
        let index = build_index(&ground);
        let mapping: Vec<usize> = new_labels.iter().map(|l| index[l]).collect();
        let circuits = self
            .circuits
            .iter()
            .map(|c| c.iter().map(|i| mapping[i]).collect())
            .collect();
        Self::from_sets_unchecked(ground, circuits)
    }

    /// Re-expresses a set of this matroid in the indexing of `other`.
    pub fn transfer(&self, set: ElemSet, other: &Matroid) -> Result<ElemSet> {
        let mut out = ElemSet::EMPTY;
        for i in set.iter() {
            out = out.with(other.index_of(&self.ground[i])?);
        }
        Ok(out)
    }

    fn describe_witness(&self, axiom: Axiom, w: &[ElemSet]) -> String {
        let show = |s: &ElemSet| format!("{{{}}}", self.labels(*s).join(" "));
        match axiom {
            Axiom::C1 => "the empty set is listed as a circuit".to_string(),
            Axiom::C2 => format!("{} is contained in {}", show(&w[0]), show(&w[1])),
            Axiom::C3 => format!(
                "eliminating {} from {} and {} keeping {}: no circuit inside the union",
                self.labels(w[2]).join(""),
                show(&w[0]),
                show(&w[1]),
                self.labels(w[3]).join("")
            ),
            Axiom::Bases => format!(
                "maximal independent sets {} and {} differ in size",
                show(&w[0]),
                show(&w[1])
            ),
        }
    }
}

impl fmt::Display for Matroid {
    /// Writes the matroid in the `ground:` / `circuit:` text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ground: {}", self.ground.join(" "))?;
        for c in &self.circuits {
            writeln!(f, "circuit: {}", self.labels(*c).join(" "))?;
        }
        Ok(())
    }
}

/// Labels `a, b, ...` for up to 26 elements, `e00, e01, ...` beyond.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("e{i:03}")).collect()
    }
}

pub(crate) fn index_mapping(n: usize, kept: ElemSet) -> Vec<Option<usize>> {
    let mut mapping = vec![None; n];
    for (new, old) in kept.iter().enumerate() {
        mapping[old] = Some(new);
    }
    mapping
}

pub(crate) fn remap(set: ElemSet, mapping: &[Option<usize>]) -> ElemSet {
    set.iter()
        .map(|i| mapping[i].expect("element survives the remapping"))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Matroid {
        // edges: a=12 b=13 c=14 d=23 e=24 f=34
        Matroid::from_circuits(
            ["a", "b", "c", "d", "e", "f"],
            [
                vec!["a", "b", "d"],
                vec!["a", "c", "e"],
                vec!["b", "c", "f"],
                vec!["d", "e", "f"],
                vec!["a", "c", "d", "f"],
                vec!["a", "b", "e", "f"],
                vec!["b", "c", "d", "e"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_circuit_is_u23() {
        let m = Matroid::from_circuits(["a", "b", "c"], [["a", "b", "c"]]).unwrap();
        assert_eq!(m, Matroid::uniform_n(2, 3).unwrap());
        assert_eq!(m.bases().len(), 3);
    }

    #[test]
    fn elimination_failure_names_the_triple() {
        let err = Matroid::from_circuits(["a", "b", "c"], [["a", "b"], ["b", "c"]]).unwrap_err();
        match err {
            Error::AxiomViolation { axiom, witness } => {
                assert_eq!(axiom, Axiom::C3);
                assert!(witness.contains("eliminating b"), "{witness}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_circuit_is_c1() {
        let empty: Vec<&str> = vec![];
        let err = Matroid::from_circuits(["a"], [empty]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::C1, .. }));
    }

    #[test]
    fn nested_circuits_are_c2() {
        let err = Matroid::from_circuits(["a", "b"], [vec!["a"], vec!["a", "b"]]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::C2, .. }));
    }

    #[test]
    fn unknown_label_is_rejected() {
        let err = Matroid::from_circuits(["a"], [["z"]]).unwrap_err();
        assert!(matches!(err, Error::UnknownElement(l) if l == "z"));
    }

    #[test]
    fn k4_rank_and_bases() {
        let m = k4();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 16);
        assert_eq!(m.rank_of(ElemSet::EMPTY), 0);
    }

    #[test]
    fn dual_of_u23_is_u13() {
        let m = Matroid::uniform_n(2, 3).unwrap();
        assert_eq!(m.dual(), Matroid::uniform_n(1, 3).unwrap());
    }

    #[test]
    fn k4_cocircuits_are_stars_and_balanced_cuts() {
        let m = k4();
        let sizes: Vec<usize> = m.cocircuits().iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 3);
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn contract_in_u23() {
        let m = Matroid::uniform_n(2, 3).unwrap();
        let c = m.minor_by_labels(["a"], []).unwrap();
        assert_eq!(c, Matroid::uniform(1, ["b", "c"]).unwrap());
        assert_eq!(m.minor(ElemSet::EMPTY, ElemSet::EMPTY).unwrap(), m);
    }

    #[test]
    fn overlapping_minor_sets() {
        let m = Matroid::uniform_n(2, 3).unwrap();
        assert!(matches!(
            m.minor_by_labels(["a"], ["a"]),
            Err(Error::OverlappingSets(_))
        ));
    }

    #[test]
    fn fundamental_circuit_in_u23() {
        let m = Matroid::uniform_n(2, 3).unwrap();
        let base = m.set_of(["a", "b"]).unwrap();
        let c = m.fundamental_circuit(base, 2).unwrap();
        assert_eq!(c, m.ground_set());
        assert!(matches!(
            m.fundamental_circuit(base, 0),
            Err(Error::ElementPositionInvalid(_))
        ));
        assert!(matches!(
            m.fundamental_circuit(m.set_of(["a"]).unwrap(), 2),
            Err(Error::NotABase(_))
        ));
    }

    #[test]
    fn cocircuit_through_pair_in_u23() {
        let m = Matroid::uniform_n(2, 3).unwrap();
        let b = m.cocircuit_through_pair(m.ground_set(), 0, 1).unwrap();
        assert_eq!(b, m.set_of(["a", "b"]).unwrap());
    }

    #[test]
    fn scrawl_cases() {
        let m = k4();
        assert!(m.is_scrawl(ElemSet::EMPTY).is_scrawl());
        match m.is_scrawl(ElemSet::singleton(0)) {
            ScrawlVerdict::NotScrawl(b) => assert_eq!(b.intersection(ElemSet::singleton(0)).len(), 1),
            v => panic!("{v:?}"),
        }
        let two = m.set_of(["a", "b", "d", "c", "e"]).unwrap();
        assert!(m.is_scrawl(two).is_scrawl());
    }

    #[test]
    fn eliminate_in_u13() {
        let m = Matroid::uniform_n(1, 3).unwrap();
        let ab = m.set_of(["a", "b"]).unwrap();
        let bc = m.set_of(["b", "c"]).unwrap();
        assert_eq!(m.circuit_eliminate(ab, bc, 1, 0).unwrap(), m.set_of(["a", "c"]).unwrap());
        assert!(m.circuit_eliminate(ab, ab, 1, 0).is_err());
    }

    #[test]
    fn k4_is_three_connected() {
        let m = k4();
        assert!(m.two_separations().is_empty());
        assert!(m.is_three_connected());
    }

    #[test]
    fn direct_sum_is_disconnected() {
        let m = Matroid::from_circuits(
            ["a", "b", "c", "x", "y", "z"],
            [["a", "b", "c"], ["x", "y", "z"]],
        )
        .unwrap();
        assert!(!m.is_connected());
        assert_eq!(m.components().len(), 2);
    }

    #[test]
    fn uniform_minors() {
        assert!(Matroid::uniform_n(2, 4).unwrap().has_uniform_minor(2, 4));
        assert!(!Matroid::uniform_n(2, 3).unwrap().has_uniform_minor(2, 4));
        assert!(!k4().has_uniform_minor(2, 4));
        assert!(Matroid::uniform_n(3, 6).unwrap().has_uniform_minor(2, 4));
    }

    #[test]
    fn relabel_preserves_structure() {
        let m = k4();
        let r = m.relabel(|l| format!("{l}'")).unwrap();
        assert_eq!(r.circuits().len(), 7);
        assert!(m.relabel(|_| "x".into()).is_err());
    }
}
