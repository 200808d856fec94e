//! Brute-force reference implementations.
//!
//! Everything here quantifies directly over all candidate objects and shares
//! no search code with the main modules, so it can be used to cross-check
//! them on small inputs.

use std::collections::BTreeSet;

use crate::algebra::{Algebra, BinaryOp};
use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::partition::Partition;

pub const MAX_CONGRUENCE_SIZE: usize = 7;
pub const MAX_MAP_COUNT: u64 = 10_000_000;
pub const MAX_SUBSET_SIZE: usize = 16;
pub const MAX_SEMIGROUP_SIZE: usize = 3;

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for v in 0..=limit {
            cur.push(v);
            rec(n, cur, max.max(v), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

fn respects(a: &Algebra, label: &[usize]) -> bool {
    let n = a.size();
    let same = |x: usize, y: usize| label[x] == label[y];
    for x in 0..n {
        for x2 in 0..n {
            if !same(x, x2) {
                continue;
            }
            for u in a.unary_ops() {
                if !same(u.apply(x), u.apply(x2)) {
                    return false;
                }
            }
            for y in 0..n {
                for y2 in 0..n {
                    if same(y, y2)
                        && a
                            .binary_ops()
                            .iter()
                            .any(|b| !same(b.apply(x, y), b.apply(x2, y2)))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every partition compatible with all operations, in set order.
pub fn oracle_congruences(a: &Algebra) -> Result<Vec<Partition>> {
    if a.size() > MAX_CONGRUENCE_SIZE {
        return Err(Error::SizeTooLarge(format!(
            "{} elements, congruence oracle handles at most {}",
            a.size(),
            MAX_CONGRUENCE_SIZE
        )));
    }
    let mut out: Vec<Partition> = set_partitions(a.size())
        .into_iter()
        .filter(|l| respects(a, l))
        .map(|l| Partition::from_labels(&l))
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Endo,
    Mono,
    Epi,
    Auto,
    Iso,
    Hom,
}

fn is_hom(f: &[usize], a: &Algebra, b: &Algebra) -> bool {
    let n = a.size();
    a.binary_ops().iter().zip(b.binary_ops()).all(|(p, q)| {
        (0..n).all(|x| (0..n).all(|y| f[p.apply(x, y)] == q.apply(f[x], f[y])))
    }) && a
        .unary_ops()
        .iter()
        .zip(b.unary_ops())
        .all(|(u, v)| (0..n).all(|x| f[u.apply(x)] == v.apply(f[x])))
}

/// Every map of the requested kind, in lexicographic order.
pub fn oracle_maps(a: &Algebra, b: &Algebra, kind: MapKind) -> Result<Vec<Mapping>> {
    if !a.compatible(b) {
        return Err(Error::IncompatibleAlgebras);
    }
    let (n, m) = (a.size(), b.size());
    let count = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if count > MAX_MAP_COUNT {
        return Err(Error::SizeTooLarge(format!("{m}^{n} candidate maps")));
    }
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let keep = is_hom(&f, a, b) && {
            let injective = {
                let mut seen = vec![false; m];
                f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            };
            let surjective = {
                let mut hit = vec![false; m];
                f.iter().for_each(|&v| hit[v] = true);
                hit.iter().all(|&h| h)
            };
            match kind {
                MapKind::Hom | MapKind::Endo => true,
                MapKind::Mono => injective,
                MapKind::Epi => surjective,
                MapKind::Auto | MapKind::Iso => injective && surjective,
            }
        };
        if keep {
            out.push(Mapping::new(f.clone()));
        }
        // odometer, last position fastest, gives lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
        }
    }
}

/// Every non-empty closed subset, ordered by size and then lexicographically.
pub fn oracle_subuniverses(a: &Algebra) -> Result<Vec<Vec<usize>>> {
    let n = a.size();
    if n > MAX_SUBSET_SIZE {
        return Err(Error::SizeTooLarge(format!("2^{n} subsets")));
    }
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
        .filter_map(|bits| {
            let member: Vec<bool> = (0..n).map(|x| bits >> x & 1 == 1).collect();
            a.is_closed(&member)
                .then(|| (0..n).filter(|&x| member[x]).collect())
        })
        .collect();
    out.sort_by(|x: &Vec<usize>, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Unordered pairs of nontrivial congruences `{φ, ψ}` for which
/// `x ↦ ([x]φ, [x]ψ)` is a bijection onto `A/φ × A/ψ`.
pub fn oracle_directly_reducible(a: &Algebra) -> Result<Vec<(Partition, Partition)>> {
    let n = a.size();
    let cons: Vec<Partition> = oracle_congruences(a)?
        .into_iter()
        .filter(|c| {
            let k = c.number_of_blocks();
            k > 1 && k < n
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..cons.len() {
        for j in i + 1..cons.len() {
            let (p, q) = (&cons[i], &cons[j]);
            let pairs: BTreeSet<(usize, usize)> = (0..n).map(|x| (p.find(x), q.find(x))).collect();
            if pairs.len() == n && p.number_of_blocks() * q.number_of_blocks() == n {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    Ok(out)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Smallest table (as a cell vector) among all relabelings of `t` and of
/// its transpose.
fn canonical_form(t: &BinaryOp, perms: &[Vec<usize>]) -> Vec<usize> {
    let n = t.size();
    let tt = t.transpose();
    let mut best: Option<Vec<usize>> = None;
    for table in [t, &tt] {
        for p in perms {
            let mut inv = vec![0; n];
            for (x, &px) in p.iter().enumerate() {
                inv[px] = x;
            }
            let cells: Vec<usize> = (0..n * n)
                .map(|k| p[table.apply(inv[k / n], inv[k % n])])
                .collect();
            if best.as_ref().is_none_or(|b| cells < *b) {
                best = Some(cells);
            }
        }
    }
    best.unwrap()
}

/// One representative per class of semigroups of order `n` up to
/// isomorphism and anti-isomorphism. Representatives are the canonical
/// (lexicographically least) tables, listed in ascending order.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<Algebra>> {
    if n == 0 || n > MAX_SEMIGROUP_SIZE {
        return Err(Error::SizeTooLarge(format!(
            "semigroup enumeration supports orders 1..={MAX_SEMIGROUP_SIZE}"
        )));
    }
    let perms = permutations(n);
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut classes: BTreeSet<Vec<usize>> = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let table: Vec<usize> = (0..cells)
            .map(|_| {
                let v = c % n;
                c /= n;
                v
            })
            .collect();
        let op = BinaryOp::new(n, table)?;
        if op.is_associative() {
            classes.insert(canonical_form(&op, &perms));
        }
    }
    classes
        .into_iter()
        .map(|cells| Ok(Algebra::magma(BinaryOp::new(n, cells)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        for n in 0..=7 {
            assert_eq!(set_partitions(n).len() as u64, crate::partition::bell_number(n));
        }
    }

    #[test]
    fn congruence_oracle_examples() {
        let k = Algebra::magma(BinaryOp::from_fn(6, |_, _| 0).unwrap());
        assert_eq!(oracle_congruences(&k).unwrap().len(), 203);
        let one = Algebra::magma(BinaryOp::from_fn(1, |_, _| 0).unwrap());
        assert_eq!(oracle_congruences(&one).unwrap().len(), 1);
        let big = Algebra::magma(BinaryOp::from_fn(8, |_, _| 0).unwrap());
        assert!(matches!(oracle_congruences(&big), Err(Error::SizeTooLarge(_))));
    }

    #[test]
    fn map_oracle_examples() {
        let lz = Algebra::magma(BinaryOp::from_fn(2, |x, _| x).unwrap());
        assert_eq!(oracle_maps(&lz, &lz, MapKind::Endo).unwrap().len(), 4);
        let c4 = Algebra::magma(BinaryOp::from_fn(4, |x, y| (x + y) % 4).unwrap());
        let c2 = Algebra::magma(BinaryOp::from_fn(2, |x, y| (x + y) % 2).unwrap());
        assert_eq!(oracle_maps(&c4, &c2, MapKind::Epi).unwrap().len(), 1);
        assert_eq!(oracle_maps(&c4, &c4, MapKind::Auto).unwrap().len(), 2);
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
    }

    #[test]
    fn semigroup_class_counts() {
        assert_eq!(enumerate_semigroups(1).unwrap().len(), 1);
        assert_eq!(enumerate_semigroups(2).unwrap().len(), 4);
        assert_eq!(enumerate_semigroups(3).unwrap().len(), 18);
        assert!(enumerate_semigroups(4).is_err());
    }
}
