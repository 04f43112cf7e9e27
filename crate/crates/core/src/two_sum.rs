//! 2-sums of matroids that share exactly one element.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Two matroids together with the single element they share.
#[derive(Debug, Clone)]
pub struct SharedEdgeWitness<'a> {
    pub left: &'a Matroid,
    pub right: &'a Matroid,
    pub shared: &'a str,
}

impl<'a> SharedEdgeWitness<'a> {
    pub fn new(left: &'a Matroid, right: &'a Matroid, shared: &'a str) -> Self {
        SharedEdgeWitness { left, right, shared }
    }

    /// Checks that the grounds meet in exactly the shared element and that it
    /// is neither a loop nor a coloop on either side.
    pub fn check(&self) -> Result<()> {
        let l: BTreeSet<&str> = self.left.ground().iter().map(String::as_str).collect();
        let r: BTreeSet<&str> = self.right.ground().iter().map(String::as_str).collect();
        let common: Vec<String> = l.intersection(&r).map(|s| s.to_string()).collect();
        if common.len() != 1 || common[0] != self.shared {
            return Err(Error::BadOverlap(common));
        }
        for (m, side) in [(self.left, "the left operand"), (self.right, "the right operand")] {
            let e = m.index_of(self.shared)?;
            let kind = if m.is_loop(e) {
                "loop"
            } else if m.is_coloop(e) {
                "coloop"
            } else {
                continue;
            };
            return Err(Error::DegenerateSharedEdge {
                element: self.shared.to_string(),
                kind,
                side,
            });
        }
        Ok(())
    }
}

/// The 2-sum along the shared element. The result is re-validated.
pub fn two_sum(w: &SharedEdgeWitness<'_>) -> Result<Matroid> {
    w.check()?;
    let (left, right) = (w.left, w.right);
    let el = left.index_of(w.shared)?;
    let er = right.index_of(w.shared)?;
    let ground: Vec<String> = left
        .ground()
        .iter()
        .chain(right.ground())
        .filter(|l| *l != w.shared)
        .cloned()
        .collect();
    let mut circuits: Vec<Vec<String>> = Vec::new();
    for &o in left.circuits() {
        if !o.contains(el) {
            circuits.push(left.labels(o));
        }
    }
    for &o in right.circuits() {
        if !o.contains(er) {
            circuits.push(right.labels(o));
        }
    }
    for &ol in left.circuits().iter().filter(|o| o.contains(el)) {
        for &or in right.circuits().iter().filter(|o| o.contains(er)) {
            let mut c = left.labels(ol.without(el));
            c.extend(right.labels(or.without(er)));
            circuits.push(c);
        }
    }
    Matroid::from_circuits(ground, circuits)
}

/// Left fold of 2-sums: `parts[0] ⊕ parts[1] ⊕ ...`, where `shared[i]` joins
/// `parts[i]` and `parts[i + 1]`. Non-consecutive parts must be disjoint.
pub fn fold_two_sums(parts: &[Matroid], shared: &[String]) -> Result<Matroid> {
    if parts.is_empty() {
        return Err(Error::PreconditionViolated("empty chain".into()));
    }
    if shared.len() + 1 != parts.len() {
        return Err(Error::PreconditionViolated(format!(
            "{} parts need {} shared elements, got {}",
            parts.len(),
            parts.len() - 1,
            shared.len()
        )));
    }
    for i in 0..parts.len() {
        for j in i + 2..parts.len() {
            let a: BTreeSet<&String> = parts[i].ground().iter().collect();
            let common: Vec<String> = parts[j]
                .ground()
                .iter()
                .filter(|l| a.contains(l))
                .cloned()
                .collect();
            if !common.is_empty() {
                return Err(Error::BadOverlap(common));
            }
        }
    }
    let mut acc = parts[0].clone();
    for (m, e) in parts[1..].iter().zip(shared) {
        acc = two_sum(&SharedEdgeWitness::new(&acc, m, e))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(labels: [&str; 3]) -> Matroid {
        Matroid::uniform(2, labels).unwrap()
    }

    #[test]
    fn two_triangles_make_a_four_circuit() {
        let l = tri(["a", "b", "e"]);
        let r = tri(["c", "d", "e"]);
        let s = two_sum(&SharedEdgeWitness::new(&l, &r, "e")).unwrap();
        assert_eq!(s, Matroid::uniform(3, ["a", "b", "c", "d"]).unwrap());
    }

    #[test]
    fn three_triangle_chain() {
        let parts = [tri(["a", "b", "x"]), tri(["x", "c", "y"]), tri(["y", "d", "f"])];
        let s = fold_two_sums(&parts, &["x".into(), "y".into()]).unwrap();
        assert_eq!(s, Matroid::uniform(4, ["a", "b", "c", "d", "f"]).unwrap());
    }

    #[test]
    fn singleton_chain_is_identity() {
        let m = tri(["a", "b", "c"]);
        assert_eq!(fold_two_sums(std::slice::from_ref(&m), &[]).unwrap(), m);
    }

    #[test]
    fn rejects_bad_overlap_and_degenerate_shared() {
        let l = tri(["a", "b", "e"]);
        let r = tri(["a", "b", "e"]);
        assert!(matches!(
            two_sum(&SharedEdgeWitness::new(&l, &r, "e")),
            Err(Error::BadOverlap(_))
        ));
        let free = Matroid::uniform(2, ["e", "x"]).unwrap();
        assert!(matches!(
            two_sum(&SharedEdgeWitness::new(&l, &free, "e")),
            Err(Error::DegenerateSharedEdge { kind: "coloop", .. })
        ));
        let looped = Matroid::from_circuits(["e", "x"], [["e"]]).unwrap();
        assert!(matches!(
            two_sum(&SharedEdgeWitness::new(&looped, &l, "e")),
            Err(Error::DegenerateSharedEdge { kind: "loop", .. })
        ));
    }

    #[test]
    fn series_extension_by_contraction() {
        // K4 with edge `a` replaced by a series pair {x, y}
        let k4 = Matroid::from_circuits(
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
        .unwrap();
        let t = tri(["a", "x", "y"]);
        let s = two_sum(&SharedEdgeWitness::new(&k4, &t, "a")).unwrap();
        let back = s.minor_by_labels(["x"], []).unwrap().relabel(|l| {
            if l == "y" { "a".into() } else { l.to_string() }
        });
        assert_eq!(back.unwrap(), k4);
    }

    #[test]
    fn commutes_and_exchanges_with_duality() {
        let l = Matroid::uniform(2, ["a", "b", "c", "e"]).unwrap();
        let r = tri(["e", "x", "y"]);
        let lr = two_sum(&SharedEdgeWitness::new(&l, &r, "e")).unwrap();
        let rl = two_sum(&SharedEdgeWitness::new(&r, &l, "e")).unwrap();
        assert_eq!(lr, rl);
        let dd = two_sum(&SharedEdgeWitness::new(&l.dual(), &r.dual(), "e")).unwrap();
        assert_eq!(lr.dual(), dd);
    }
}
