//! Subuniverses, divisors and direct decompositions.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{quotient_algebra, subalgebra_from_universe, Algebra};
use crate::congruence::all_congruences;
use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::morphism::{algebra_automorphisms, are_isomorphic};
use crate::partition::Partition;

/// A closed subset under construction: membership mask plus member list.
#[derive(Clone, Debug)]
pub(crate) struct ClosedSet {
    pub(crate) member: Vec<bool>,
    pub(crate) elems: Vec<usize>,
}

impl ClosedSet {
    pub(crate) fn empty(n: usize) -> Self {
        ClosedSet {
            member: vec![false; n],
            elems: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    /// Adds `new` and everything it generates together with the current set,
    /// which must already be closed.
    pub(crate) fn extend(&mut self, a: &Algebra, new: usize) {
        let n = a.size();
        if self.member[new] {
            return;
        }
        let mut queued = self.member.clone();
        queued[new] = true;
        let mut pending = vec![new];
        while let Some(cur) = pending.pop() {
            let mut found = Vec::new();
            for b in a.binary_ops() {
                found.push(b.apply(cur, cur));
                for &s in &self.elems {
                    found.push(b.apply(cur, s));
                    found.push(b.apply(s, cur));
                }
            }
            for u in a.unary_ops() {
                found.push(u.apply(cur));
            }
            for z in found {
                if !queued[z] {
                    queued[z] = true;
                    pending.push(z);
                }
            }
            self.member[cur] = true;
            self.elems.push(cur);
            if self.elems.len() + pending.len() == n {
                for z in pending.drain(..) {
                    self.member[z] = true;
                    self.elems.push(z);
                }
            }
        }
    }

    pub(crate) fn sorted(&self) -> Vec<usize> {
        let mut v = self.elems.clone();
        v.sort_unstable();
        v
    }
}

/// Smallest closed set containing the closed set `base` and `new_elem`.
pub fn closure(a: &Algebra, base: &[usize], new_elem: usize) -> Result<Vec<usize>> {
    let n = a.size();
    let mut set = ClosedSet::empty(n);
    for &x in base {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x, size: n });
        }
        if !set.member[x] {
            set.member[x] = true;
            set.elems.push(x);
        }
    }
    if new_elem >= n {
        return Err(Error::IndexOutOfRange {
            index: new_elem,
            size: n,
        });
    }
    if !a.is_closed(&set.member) {
        return Err(Error::NotClosed);
    }
    set.extend(a, new_elem);
    Ok(set.sorted())
}

/// Subuniverse generated by `gens`.
pub fn generated(a: &Algebra, gens: &[usize]) -> Vec<usize> {
    let mut set = ClosedSet::empty(a.size());
    for &g in gens {
        set.extend(a, g);
    }
    set.sorted()
}

fn image_of_set(h: &Mapping, s: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|&x| h.apply(x)).collect();
    v.sort_unstable();
    v
}

/// Automorphisms used to prune the subuniverse search. Algebras without
/// operations have every permutation as an automorphism; only the identity
/// is used for them.
fn pruning_group(a: &Algebra) -> Vec<Mapping> {
    if a.operation_count() == 0 {
        vec![Mapping::identity(a.size())]
    } else {
        algebra_automorphisms(a).expect("algebra has operations")
    }
}

/// All non-empty subuniverses, ordered by size and then lexicographically.
///
/// Layer `i` holds the subuniverses generated by `i` elements. When a set
/// is extended, only one new element per orbit of its setwise stabilizer
/// in the automorphism group is tried; each layer is then closed under the
/// full automorphism group.
pub fn all_subuniverses(a: &Algebra) -> Vec<Vec<usize>> {
    let n = a.size();
    let autos = pruning_group(a);
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut previous: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let layer: BTreeSet<Vec<usize>> = previous
            .par_iter()
            .flat_map_iter(|base| expand_by_orbits(a, &autos, base))
            .collect();
        let mut expanded: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &layer {
            for h in &autos {
                expanded.insert(image_of_set(h, s));
            }
        }
        let done = layer.len() == 1 && layer.iter().next().map(Vec::len) == Some(n);
        previous = expanded.iter().cloned().collect();
        all.extend(expanded);
        if done || previous.is_empty() {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn expand_by_orbits(a: &Algebra, autos: &[Mapping], base: &[usize]) -> Vec<Vec<usize>> {
    let n = a.size();
    let stabilizer: Vec<&Mapping> = autos
        .iter()
        .filter(|h| image_of_set(h, base) == base)
        .collect();
    let mut base_set = ClosedSet::empty(n);
    for &x in base {
        base_set.member[x] = true;
        base_set.elems.push(x);
    }
    let mut remaining: Vec<bool> = (0..n).map(|x| !base_set.member[x]).collect();
    let mut out = Vec::new();
    for j in 0..n {
        if !remaining[j] {
            continue;
        }
        let mut s = base_set.clone();
        s.extend(a, j);
        out.push(s.sorted());
        for h in &stabilizer {
            remaining[h.apply(j)] = false;
        }
    }
    out
}

/// A subuniverse of the first algebra together with a congruence of the
/// corresponding subalgebra whose quotient is isomorphic to the second.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorWitness {
    /// Zero-based elements of the subuniverse, ascending.
    pub subuniverse: Vec<usize>,
    /// Congruence on the subalgebra's relabeled carrier `0..|subuniverse|`.
    pub congruence: Partition,
}

fn divisor_search(a1: &Algebra, a2: &Algebra, first_only: bool) -> Result<Vec<DivisorWitness>> {
    if !a1.compatible(a2) {
        return Err(Error::IncompatibleAlgebras);
    }
    let target = a2.size();
    let mut out = Vec::new();
    for s in all_subuniverses(a1) {
        if s.len() < target {
            continue;
        }
        let (sub, _) = subalgebra_from_universe(a1, &s)?;
        for c in all_congruences(&sub) {
            if c.number_of_blocks() != target {
                continue;
            }
            let q = quotient_algebra(&sub, &c)?;
            if are_isomorphic(&q.quotient, a2)?.is_some() {
                out.push(DivisorWitness {
                    subuniverse: s.clone(),
                    congruence: c,
                });
                if first_only {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Every (subuniverse, congruence) pair certifying that `a2` divides `a1`.
pub fn all_divisor_witnesses(a1: &Algebra, a2: &Algebra) -> Result<Vec<DivisorWitness>> {
    divisor_search(a1, a2, false)
}

pub fn one_divisor_witness(a1: &Algebra, a2: &Algebra) -> Result<Option<DivisorWitness>> {
    Ok(divisor_search(a1, a2, true)?.into_iter().next())
}

pub fn exists_divisor(a1: &Algebra, a2: &Algebra) -> Result<bool> {
    Ok(one_divisor_witness(a1, a2)?.is_some())
}

fn reducible_search(a: &Algebra, first_only: bool) -> Vec<(Partition, Partition)> {
    let n = a.size();
    let candidates: Vec<(Partition, usize)> = all_congruences(a)
        .into_iter()
        .map(|c| {
            let k = c.number_of_blocks();
            (c, k)
        })
        .filter(|&(_, k)| k != 1 && k != n && n.is_multiple_of(k))
        .collect();
    let mut pairs = Vec::new();
    for (i, (p, pk)) in candidates.iter().enumerate() {
        for (q, qk) in &candidates[i + 1..] {
            if pk * qk != n {
                continue;
            }
            if p.meet(q).expect("equal lengths").number_of_blocks() == n {
                pairs.push((p.clone(), q.clone()));
                if first_only {
                    return pairs;
                }
            }
        }
    }
    pairs
}

/// Unordered pairs of nontrivial congruences witnessing `a ≅ a/φ × a/ψ`.
/// Each pair is listed once, smaller partition (in set order) first.
pub fn directly_reducible(a: &Algebra) -> Vec<(Partition, Partition)> {
    reducible_search(a, false)
}

pub fn one_directly_reducible(a: &Algebra) -> Option<(Partition, Partition)> {
    reducible_search(a, true).into_iter().next()
}

pub fn is_directly_reducible(a: &Algebra) -> bool {
    one_directly_reducible(a).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BinaryOp;

    fn constant_one(n: usize) -> Algebra {
        Algebra::magma(BinaryOp::from_fn(n, |_, _| 0).unwrap())
    }

    fn left_zero(n: usize) -> Algebra {
        Algebra::magma(BinaryOp::from_fn(n, |x, _| x).unwrap())
    }

    fn cyclic(n: usize) -> Algebra {
        Algebra::magma(BinaryOp::from_fn(n, |x, y| (x + y) % n).unwrap())
    }

    fn klein() -> Algebra {
        Algebra::magma(BinaryOp::from_fn(4, |x, y| x ^ y).unwrap())
    }

    fn six_element_example() -> Algebra {
        let mut rows = vec![vec![1; 6]; 5];
        rows.push(vec![1, 1, 1, 2, 3, 1]);
        Algebra::magma_from_rows(&rows).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&left_zero(3), &[], 1).unwrap(), vec![1]);
        assert_eq!(closure(&constant_one(6), &[], 1).unwrap(), vec![0, 1]);
        let a = six_element_example();
        // {1,2} ∪ {5}: 5·5 = 1, nothing else new
        assert_eq!(closure(&a, &[0, 1], 4).unwrap(), vec![0, 1, 4]);
        // {1,4} ∪ {6}: 6·4 = 2
        assert_eq!(closure(&a, &[0, 3], 5).unwrap(), vec![0, 1, 3, 5]);
        assert_eq!(closure(&a, &[1], 2).unwrap_err(), Error::NotClosed);
    }

    #[test]
    fn closure_shortcut_reaches_full_carrier() {
        let c = cyclic(5);
        assert_eq!(closure(&c, &[], 1).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn subuniverse_examples() {
        let s = all_subuniverses(&constant_one(6));
        assert_eq!(s.len(), 32);
        assert!(s.iter().all(|u| u.contains(&0)));
        assert_eq!(all_subuniverses(&left_zero(3)).len(), 7);
        assert_eq!(
            all_subuniverses(&cyclic(4)),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn divisor_examples() {
        let a = six_element_example();
        let w = all_divisor_witnesses(&a, &a).unwrap();
        assert!(w.contains(&DivisorWitness {
            subuniverse: (0..6).collect(),
            congruence: Partition::identity(6),
        }));
        let trivial = constant_one(1);
        let w = all_divisor_witnesses(&a, &trivial).unwrap();
        assert_eq!(w.len(), all_subuniverses(&a).len());
        assert!(w.iter().all(|d| d.congruence.number_of_blocks() == 1));

        let quotient = constant_one(3);
        let w = all_divisor_witnesses(&a, &quotient).unwrap();
        assert!(w.contains(&DivisorWitness {
            subuniverse: (0..6).collect(),
            congruence: Partition::from_encoding(&[-3, 1, 1, -1, -2, 5]).unwrap(),
        }));
        assert!(exists_divisor(&a, &quotient).unwrap());
        assert!(!exists_divisor(&constant_one(2), &cyclic(2)).unwrap());
    }

    #[test]
    fn reducibility_examples() {
        assert!(directly_reducible(&cyclic(5)).is_empty());
        assert!(directly_reducible(&cyclic(4)).is_empty());
        let pairs = directly_reducible(&klein());
        assert_eq!(pairs.len(), 3);
        for (p, q) in &pairs {
            assert!(p < q);
            assert_eq!(p.number_of_blocks() * q.number_of_blocks(), 4);
        }
        assert!(is_directly_reducible(&cyclic(6)));
    }
}
