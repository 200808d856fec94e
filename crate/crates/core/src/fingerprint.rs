//! Per-element invariants used to prune morphism searches.
//!
//! For every element `p` of a magma the [`InvariantVector`] collects
//! seventeen counts that any automorphism preserves. Powers associate to the
//! left: `p^1 = p`, `p^k = p^(k-1) · p`.
//!
//! | slot | value |
//! |------|-------|
//! | 1  | smallest `k > 1` such that `p^k` recurs later in the power sequence |
//! | 2  | `#{y : p·y = y}` |
//! | 3  | `#{y : y·p = y}` |
//! | 4  | `#{y : (p·y)·p = p}` |
//! | 5  | distinct entries of row `p` |
//! | 6  | distinct entries of column `p` |
//! | 7  | `p·p = p` |
//! | 8  | distinct idempotents in column `p` |
//! | 9  | distinct idempotents in row `p` |
//! | 10 | `p·(p·p) = (p·p)·p` |
//! | 11 | `#{y : p·y = y·p}` |
//! | 12 | `#{s : (s·s)·p = p·(s·s)}` |
//! | 13 | `#{s : s·s = p}` |
//! | 14 | `#{s : p·(p·s) = (p·p)·s}` |
//! | 15 | `#{{x, y} : x·y = y·x = p}` (multisets, `x = y` allowed) |
//! | 16 | `#{t : p = e·t and p = t·f for some idempotents e, f}` |
//! | 17 | `#{t : t = y·x for some x, y with x·y = p}` |

use std::fmt;

use crate::algebra::{Algebra, BinaryOp};
use crate::structure::ClosedSet;

pub const INVARIANT_COUNT: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantVector(pub [u32; INVARIANT_COUNT]);

impl InvariantVector {
    /// Slot `k`, numbered from 1 as in the table above.
    pub fn get(&self, k: usize) -> u32 {
        self.0[k - 1]
    }

    /// Whether an injective homomorphism may send an element with vector
    /// `self` to an element with vector `target`.
    ///
    /// Slots 1, 7 and 10 are preserved exactly by injective maps; every
    /// other slot counts witnesses whose images remain witnesses, so it can
    /// only grow in a larger codomain.
    pub fn embeds_into(&self, target: &InvariantVector) -> bool {
        self.0.iter().zip(target.0.iter()).enumerate().all(|(i, (a, b))| match i + 1 {
            1 | 7 | 10 => a == b,
            _ => a <= b,
        })
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn power_repeat_index(m: &BinaryOp, p: usize) -> u32 {
    let n = m.size();
    let mut powers = Vec::with_capacity(2 * n + 2);
    powers.push(p);
    for _ in 0..2 * n + 1 {
        let last = *powers.last().unwrap();
        powers.push(m.apply(last, p));
    }
    // powers[k - 1] = p^k; the sequence is eventually periodic within n + 1 steps
    for k in 2..=powers.len() {
        let v = powers[k - 1];
        if powers[k..].contains(&v) {
            return k as u32;
        }
    }
    unreachable!("power sequence must repeat")
}

fn count_distinct(values: impl Iterator<Item = usize>, n: usize, filter: &[bool]) -> u32 {
    let mut seen = vec![false; n];
    let mut count = 0;
    for v in values {
        if filter[v] && !seen[v] {
            seen[v] = true;
            count += 1;
        }
    }
    count
}

/// Invariant vector of one element.
pub fn invariant_vector(m: &BinaryOp, p: usize) -> InvariantVector {
    all_invariant_vectors(m)[p]
}

/// Invariant vectors of every element.
pub fn all_invariant_vectors(m: &BinaryOp) -> Vec<InvariantVector> {
    let n = m.size();
    let f = |x: usize, y: usize| m.apply(x, y);
    let idempotent: Vec<bool> = (0..n).map(|x| f(x, x) == x).collect();
    let everything = vec![true; n];

    let mut square_roots = vec![0u32; n];
    for s in 0..n {
        square_roots[f(s, s)] += 1;
    }
    let mut commuting_factorizations = vec![0u32; n];
    for x in 0..n {
        for y in x..n {
            let xy = f(x, y);
            if xy == f(y, x) {
                commuting_factorizations[xy] += 1;
            }
        }
    }
    // slot 17: for each p, the set {y·x : x·y = p}
    let mut swapped = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            swapped[f(x, y)][f(y, x)] = true;
        }
    }
    // slot 16: left[t][p] = p ∈ E·t, right[t][p] = p ∈ t·E
    let idems: Vec<usize> = (0..n).filter(|&e| idempotent[e]).collect();
    let mut filter_count = vec![0u32; n];
    for t in 0..n {
        let mut left = vec![false; n];
        for &e in &idems {
            left[f(e, t)] = true;
        }
        let mut counted = vec![false; n];
        for &e in &idems {
            let p = f(t, e);
            if left[p] && !counted[p] {
                counted[p] = true;
                filter_count[p] += 1;
            }
        }
    }

    (0..n)
        .map(|p| {
            let pp = f(p, p);
            let mut v = [0u32; INVARIANT_COUNT];
            v[0] = power_repeat_index(m, p);
            v[1] = (0..n).filter(|&y| f(p, y) == y).count() as u32;
            v[2] = (0..n).filter(|&y| f(y, p) == y).count() as u32;
            v[3] = (0..n).filter(|&y| f(f(p, y), p) == p).count() as u32;
            v[4] = count_distinct((0..n).map(|y| f(p, y)), n, &everything);
            v[5] = count_distinct((0..n).map(|y| f(y, p)), n, &everything);
            v[6] = u32::from(idempotent[p]);
            v[7] = count_distinct((0..n).map(|y| f(y, p)), n, &idempotent);
            v[8] = count_distinct((0..n).map(|y| f(p, y)), n, &idempotent);
            v[9] = u32::from(f(p, pp) == f(pp, p));
            v[10] = (0..n).filter(|&y| f(p, y) == f(y, p)).count() as u32;
            v[11] = (0..n)
                .filter(|&s| {
                    let ss = f(s, s);
                    f(ss, p) == f(p, ss)
                })
                .count() as u32;
            v[12] = square_roots[p];
            v[13] = (0..n).filter(|&s| f(p, f(p, s)) == f(pp, s)).count() as u32;
            v[14] = commuting_factorizations[p];
            v[15] = filter_count[p];
            v[16] = swapped[p].iter().filter(|&&b| b).count() as u32;
            InvariantVector(v)
        })
        .collect()
}

/// Elements grouped by equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementBlocks {
    /// Blocks in ascending fingerprint order; elements ascending within a block.
    pub blocks: Vec<Vec<usize>>,
    /// Index into `blocks` for every element.
    pub block_of: Vec<usize>,
}

impl ElementBlocks {
    /// Groups elements by any totally ordered key.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&x, &y| keys[x].cmp(&keys[y]).then(x.cmp(&y)));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; keys.len()];
        for (i, &x) in order.iter().enumerate() {
            if i == 0 || keys[order[i - 1]] != keys[x] {
                blocks.push(Vec::new());
            }
            block_of[x] = blocks.len() - 1;
            blocks.last_mut().unwrap().push(x);
        }
        ElementBlocks { blocks, block_of }
    }

    pub fn block_size_of(&self, x: usize) -> usize {
        self.blocks[self.block_of[x]].len()
    }
}

pub fn element_blocks(m: &BinaryOp) -> ElementBlocks {
    ElementBlocks::from_keys(&all_invariant_vectors(m))
}

/// Fingerprint for automorphism pruning in algebras without binary operations:
/// for each unary operation, the forward orbit size of `p` and its number of
/// preimages.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnaryFingerprint(pub Vec<(u32, u32)>);

impl UnaryFingerprint {
    /// Orbit sizes are kept by injective maps; preimage counts can only grow.
    pub fn embeds_into(&self, target: &UnaryFingerprint) -> bool {
        self.0
            .iter()
            .zip(&target.0)
            .all(|(&(orbit_a, pre_a), &(orbit_b, pre_b))| orbit_a == orbit_b && pre_a <= pre_b)
    }
}

pub fn unary_fingerprints(a: &Algebra) -> Vec<UnaryFingerprint> {
    let n = a.size();
    let mut out = vec![UnaryFingerprint(Vec::new()); n];
    for u in a.unary_ops() {
        let mut preimages = vec![0u32; n];
        for x in 0..n {
            preimages[u.apply(x)] += 1;
        }
        for (p, fp) in out.iter_mut().enumerate() {
            let mut seen = vec![false; n];
            let mut x = p;
            let mut orbit = 0;
            while !seen[x] {
                seen[x] = true;
                orbit += 1;
                x = u.apply(x);
            }
            fp.0.push((orbit, preimages[p]));
        }
    }
    out
}

/// Greedy generating set of an algebra.
///
/// Repeatedly adds the element whose addition enlarges the generated
/// subuniverse most; ties go to the element from the smaller block, then to
/// the smaller element.
pub fn greedy_generating_set(a: &Algebra, blocks: &ElementBlocks) -> Vec<usize> {
    let n = a.size();
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&x| (blocks.block_size_of(x), x));
    let mut generated = ClosedSet::empty(n);
    let mut gens = Vec::new();
    while generated.len() < n {
        let mut best: Option<(usize, ClosedSet)> = None;
        for &c in &candidates {
            let mut s = generated.clone();
            s.extend(a, c);
            let better = match &best {
                None => true,
                Some((b, bs)) => {
                    s.len() > bs.len()
                        || (s.len() == bs.len()
                            && (blocks.block_size_of(c), c) < (blocks.block_size_of(*b), *b))
                }
            };
            if better {
                best = Some((c, s));
            }
        }
        let (c, s) = best.expect("candidates remain while the set is proper");
        gens.push(c);
        generated = s;
        candidates.retain(|&x| !generated.member[x]);
    }
    gens
}

/// Greedy generating set of a magma, blocks taken from its invariants.
pub fn efficient_generating_set(m: &BinaryOp, blocks: &ElementBlocks) -> Vec<usize> {
    greedy_generating_set(&Algebra::magma(m.clone()), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::generated;

    fn left_zero(n: usize) -> BinaryOp {
        BinaryOp::from_fn(n, |x, _| x).unwrap()
    }

    fn constant_one(n: usize) -> BinaryOp {
        BinaryOp::from_fn(n, |_, _| 0).unwrap()
    }

    fn cyclic(n: usize) -> BinaryOp {
        BinaryOp::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn left_zero_invariants() {
        let m = left_zero(3);
        for p in 0..3 {
            let v = invariant_vector(&m, p);
            assert_eq!(v.get(7), 1);
            assert_eq!(v.get(5), 1);
            assert_eq!(v.get(6), 3);
            assert_eq!(v.get(11), 1);
        }
    }

    #[test]
    fn cyclic_identity_invariants() {
        let v = invariant_vector(&cyclic(4), 0);
        assert_eq!(v.get(7), 1);
        assert_eq!(v.get(2), 4);
        assert_eq!(v.get(3), 4);
        assert_eq!(v.get(13), 2);
    }

    #[test]
    fn power_index_examples() {
        // identity of C4: p^1 = p^2 = …, so k = 2
        assert_eq!(invariant_vector(&cyclic(4), 0).get(1), 2);
        // generator of C4: p, p², p³, e, p, … ; p² recurs at p⁶
        assert_eq!(invariant_vector(&cyclic(4), 1).get(1), 2);
        // constant-to-1: p, 1, 1, ...; p² = 1 recurs
        assert_eq!(invariant_vector(&constant_one(3), 2).get(1), 2);
        // one element
        assert_eq!(invariant_vector(&constant_one(1), 0).get(1), 2);
        // chain 3 → 2 → 1 → 1 under x·3: p=3 gives 3, 2, 1, 1, … so k = 3
        let m = BinaryOp::from_fn(3, |x, y| if y == 2 { x.saturating_sub(1) } else { 0 }).unwrap();
        assert_eq!(invariant_vector(&m, 2).get(1), 3);
    }

    #[test]
    fn constant_table_separates_the_constant() {
        let m = constant_one(6);
        assert_ne!(invariant_vector(&m, 0), invariant_vector(&m, 1));
        let b = element_blocks(&m);
        assert_eq!(b.blocks.len(), 2);
        assert!(b.blocks.contains(&vec![0]));
        assert!(b.blocks.contains(&vec![1, 2, 3, 4, 5]));
    }

    #[test]
    fn block_examples() {
        assert_eq!(element_blocks(&left_zero(3)).blocks, vec![vec![0, 1, 2]]);
        let b = element_blocks(&cyclic(4));
        assert_eq!(b.block_size_of(0), 1);
    }

    #[test]
    fn generating_set_examples() {
        let c4 = cyclic(4);
        let g = efficient_generating_set(&c4, &element_blocks(&c4));
        assert_eq!(g.len(), 1);
        assert!(g[0] == 1 || g[0] == 3);

        let lz = left_zero(3);
        let g = efficient_generating_set(&lz, &element_blocks(&lz));
        assert_eq!(g, vec![0, 1, 2]);

        let k = constant_one(6);
        let mut g = efficient_generating_set(&k, &element_blocks(&k));
        g.sort_unstable();
        assert_eq!(g, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn generating_set_is_minimal_at_the_margin() {
        for m in [cyclic(6), constant_one(5), left_zero(4)] {
            let a = Algebra::magma(m.clone());
            let g = efficient_generating_set(&m, &element_blocks(&m));
            assert_eq!(generated(&a, &g).len(), m.size());
            assert!(generated(&a, &g[..g.len() - 1]).len() < m.size());
        }
    }

    #[test]
    fn unary_fingerprint_of_a_cycle_with_a_fixed_point() {
        let a = Algebra::new(
            4,
            vec![],
            vec![crate::algebra::UnaryOp::new(vec![1, 2, 0, 3]).unwrap()],
        )
        .unwrap();
        let fp = unary_fingerprints(&a);
        assert_eq!(fp[0].0, vec![(3, 1)]);
        assert_eq!(fp[3].0, vec![(1, 1)]);
    }
}
