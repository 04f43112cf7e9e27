//! Brute-force reference implementations. Everything here works from raw
//! circuit lists or raw edge lists by exhaustive enumeration and shares no
//! code with the main algorithms, so the two can be checked against each
//! other.

use std::collections::BTreeSet;

use crate::error::Axiom;
use crate::set::ElemSet;

fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0u128..(1u128 << n)).map(ElemSet::from_bits)
}

fn minimal(sets: impl IntoIterator<Item = ElemSet>) -> Vec<ElemSet> {
    let sets: BTreeSet<ElemSet> = sets.into_iter().collect();
    let mut out: Vec<ElemSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t != s && t.is_subset(*s)))
        .collect();
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// A matroid described only by its circuit list; all answers come from
/// scanning subsets.
#[derive(Debug, Clone)]
pub struct RawMatroid {
    pub n: usize,
    pub circuits: Vec<ElemSet>,
}

impl RawMatroid {
    pub fn new(n: usize, circuits: Vec<ElemSet>) -> Self {
        RawMatroid { n, circuits }
    }

    pub fn independent(&self, s: ElemSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    /// Largest independent subset of `x`, by scanning all its subsets.
    pub fn rank(&self, x: ElemSet) -> usize {
        x.subsets().filter(|s| self.independent(*s)).map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn bases(&self) -> Vec<ElemSet> {
        let r = self.rank(ElemSet::full(self.n));
        all_subsets(self.n).filter(|s| s.len() == r && self.independent(*s)).collect()
    }

    /// Circuits of the dual: minimal sets meeting every base.
    pub fn cocircuits(&self) -> Vec<ElemSet> {
        let bases = self.bases();
        minimal(all_subsets(self.n).filter(|s| !s.is_empty() && bases.iter().all(|b| !b.is_disjoint(*s))))
    }

    pub fn dual(&self) -> RawMatroid {
        RawMatroid::new(self.n, self.cocircuits())
    }

    /// Circuits of `M / contract \ delete`, as subsets of the original
    /// indices, from the rank of the contraction.
    pub fn minor_circuits(&self, contract: ElemSet, delete: ElemSet) -> Vec<ElemSet> {
        let rest = ElemSet::full(self.n).difference(contract).difference(delete);
        let rc = self.rank(contract);
        minimal(rest.subsets().filter(|x| !x.is_empty() && self.rank(x.union(contract)) - rc < x.len()))
    }

    /// Union of the circuits inside `w` equals `w`.
    pub fn is_scrawl(&self, w: ElemSet) -> bool {
        self.circuits
            .iter()
            .filter(|c| c.is_subset(w))
            .fold(ElemSet::EMPTY, |acc, c| acc.union(*c))
            == w
    }

    /// Every pair of elements lies on a common circuit.
    pub fn is_connected(&self) -> bool {
        (0..self.n).all(|e| {
            (e + 1..self.n).all(|f| self.circuits.iter().any(|c| c.contains(e) && c.contains(f)))
        })
    }

    /// Partitions `(A, B)` with both sides of size at least 2 and
    /// `r(A) + r(B) - r(E) <= 1`, listed by the side holding element 0.
    pub fn two_separations(&self) -> Vec<ElemSet> {
        if self.n == 0 {
            return Vec::new();
        }
        let full = ElemSet::full(self.n);
        let r = self.rank(full);
        all_subsets(self.n)
            .filter(|a| a.contains(0))
            .filter(|a| {
                let b = full.difference(*a);
                a.len() >= 2 && b.len() >= 2 && self.rank(*a) + self.rank(b) <= r + 1
            })
            .collect()
    }

    /// Whether some minor is `U_{r,k}`, by checking the minor rank function
    /// `X -> r(X ∪ C) - r(C)` against `min(|X|, r)`.
    pub fn has_uniform_minor(&self, r: usize, k: usize) -> bool {
        if k > self.n {
            return false;
        }
        for keep in all_subsets(self.n).filter(|s| s.len() == k) {
            let others = ElemSet::full(self.n).difference(keep);
            for contract in others.subsets() {
                let rc = self.rank(contract);
                if keep.subsets().all(|x| self.rank(x.union(contract)) - rc == x.len().min(r)) {
                    return true;
                }
            }
        }
        false
    }
}

/// The first failing axiom among nonempty circuits, antichain, and the
/// independence augmentation property of the circuit-free sets.
pub fn first_failing_axiom(n: usize, family: &[ElemSet]) -> Option<Axiom> {
    let family: Vec<ElemSet> = family.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if family.iter().any(|c| c.is_empty()) {
        return Some(Axiom::C1);
    }
    if family.iter().any(|a| family.iter().any(|b| a != b && a.is_subset(*b))) {
        return Some(Axiom::C2);
    }
    let raw = RawMatroid::new(n, family);
    let indep: Vec<ElemSet> = all_subsets(n).filter(|s| raw.independent(*s)).collect();
    for &i in &indep {
        for &j in indep.iter().filter(|j| j.len() > i.len()) {
            if !j.difference(i).iter().any(|x| raw.independent(i.with(x))) {
                // for an antichain, augmentation fails exactly when
                // elimination does
                return Some(Axiom::C3);
            }
        }
    }
    None
}

/// A multigraph as `(u, v)` endpoint pairs indexed by edge, on vertices
/// `0..vertices`.
#[derive(Debug, Clone)]
pub struct RawGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl RawGraph {
    fn degree_in(&self, s: ElemSet, v: usize) -> usize {
        s.iter()
            .map(|e| {
                let (a, b) = self.edges[e];
                (a == v) as usize + (b == v) as usize
            })
            .sum()
    }

    fn edges_connected(&self, s: ElemSet) -> bool {
        let Some(first) = s.first() else { return true };
        let mut seen = ElemSet::singleton(self.edges[first].0);
        loop {
            let before = seen;
            for e in s.iter() {
                let (a, b) = self.edges[e];
                if seen.contains(a) || seen.contains(b) {
                    seen = seen.with(a).with(b);
                }
            }
            if seen == before {
                break;
            }
        }
        s.iter().all(|e| seen.contains(self.edges[e].0))
    }

    /// Nonempty connected edge sets with every degree exactly 0 or 2.
    pub fn cycles(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = all_subsets(self.edges.len())
            .filter(|s| {
                !s.is_empty()
                    && (0..self.vertices).all(|v| matches!(self.degree_in(*s, v), 0 | 2))
                    && self.edges_connected(*s)
            })
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    pub fn cut(&self, side: ElemSet) -> ElemSet {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                side.contains(a) != side.contains(b)
            })
            .collect()
    }

    /// Minimal nonempty cuts over all vertex bipartitions.
    pub fn bonds(&self) -> Vec<ElemSet> {
        minimal(
            all_subsets(self.vertices)
                .map(|x| self.cut(x))
                .filter(|c| !c.is_empty()),
        )
    }
}

/// Circuits of the 2-sum along `e1` of `m1` and `e2` of `m2` from the rank
/// formula `r(X1 ∪ X2) = r1(X1) + r2(X2) - [e1 ∈ cl(X1) and e2 ∈ cl(X2)]`.
/// Elements are numbered `m1` first (without `e1`), then `m2` (without `e2`).
pub fn two_sum_circuits(m1: &RawMatroid, e1: usize, m2: &RawMatroid, e2: usize) -> Vec<ElemSet> {
    let rest1: Vec<usize> = (0..m1.n).filter(|&i| i != e1).collect();
    let rest2: Vec<usize> = (0..m2.n).filter(|&i| i != e2).collect();
    let n = rest1.len() + rest2.len();
    let split = |x: ElemSet| -> (ElemSet, ElemSet) {
        let a = x.iter().filter(|&i| i < rest1.len()).map(|i| rest1[i]).collect();
        let b = x.iter().filter(|&i| i >= rest1.len()).map(|i| rest2[i - rest1.len()]).collect();
        (a, b)
    };
    let rank = |x: ElemSet| -> usize {
        let (a, b) = split(x);
        let (ra, rb) = (m1.rank(a), m2.rank(b));
        let spans1 = m1.rank(a.with(e1)) == ra;
        let spans2 = m2.rank(b.with(e2)) == rb;
        ra + rb - (spans1 && spans2) as usize
    };
    minimal(all_subsets(n).filter(|x| !x.is_empty() && rank(*x) < x.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<ElemSet> {
        v.iter().map(|s| ElemSet::from_indices(s.iter().copied())).collect()
    }

    #[test]
    fn axiom_oracle_on_small_families() {
        assert_eq!(first_failing_axiom(3, &sets(&[&[0, 1, 2]])), None);
        assert_eq!(first_failing_axiom(3, &sets(&[&[0, 1], &[1, 2]])), Some(Axiom::C3));
        assert_eq!(first_failing_axiom(3, &sets(&[&[0, 1], &[0, 1, 2]])), Some(Axiom::C2));
        assert_eq!(first_failing_axiom(2, &sets(&[&[]])), Some(Axiom::C1));
    }

    #[test]
    fn triangle_duals_and_two_sum() {
        let tri = RawMatroid::new(3, sets(&[&[0, 1, 2]]));
        assert_eq!(tri.cocircuits(), sets(&[&[0, 1], &[0, 2], &[1, 2]]));
        // two triangles summed along one element each give a 4-circuit
        assert_eq!(two_sum_circuits(&tri, 2, &tri, 0), sets(&[&[0, 1, 2, 3]]));
    }

    #[test]
    fn k4_cycles_and_bonds() {
        let g = RawGraph {
            vertices: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        };
        assert_eq!(g.cycles().len(), 7);
        assert_eq!(g.bonds().len(), 7);
        let m = RawMatroid::new(6, g.cycles());
        assert_eq!(m.rank(ElemSet::full(6)), 3);
        assert!(!m.has_uniform_minor(2, 4));
        assert!(RawMatroid::new(4, sets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])).has_uniform_minor(2, 4));
    }
}
