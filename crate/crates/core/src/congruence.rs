//! Principal congruences, the full congruence set, and the monolith test.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{binary_to_unary, Algebra, UnaryOp};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Computes principal congruences of one algebra, reusing its unary expansion.
pub struct PrincipalCongruences {
    size: usize,
    funcs: Vec<UnaryOp>,
}

impl PrincipalCongruences {
    pub fn new(a: &Algebra) -> Self {
        PrincipalCongruences {
            size: a.size(),
            funcs: binary_to_unary(a),
        }
    }

    /// Smallest congruence relating `x` and `y`, normalized.
    pub fn generate(&self, x: usize, y: usize) -> Partition {
        let mut p = Partition::identity(self.size);
        if x == y {
            return p;
        }
        p.join_blocks(x, y);
        let mut pending = vec![(x, y)];
        while let Some((u, v)) = pending.pop() {
            for f in &self.funcs {
                let r = p.root(f.apply(u));
                let s = p.root(f.apply(v));
                if r != s {
                    p.join_blocks(r, s);
                    pending.push((r, s));
                }
            }
        }
        p.normalize();
        p
    }
}

pub fn principal_congruence(a: &Algebra, x: usize, y: usize) -> Result<Partition> {
    for e in [x, y] {
        if e >= a.size() {
            return Err(Error::IndexOutOfRange {
                index: e,
                size: a.size(),
            });
        }
    }
    Ok(PrincipalCongruences::new(a).generate(x, y))
}

/// All distinct principal congruences in set order.
pub fn all_principal_congruences(a: &Algebra) -> Vec<Partition> {
    let gen = PrincipalCongruences::new(a);
    let n = a.size();
    let mut all: Vec<Partition> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let gen = &gen;
            (i + 1..n).map(move |j| gen.generate(i, j))
        })
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

/// Every congruence (including the identity) in set order.
pub fn all_congruences(a: &Algebra) -> Vec<Partition> {
    congruences_from_principals(a.size(), &all_principal_congruences(a))
}

/// Join closure of a set of principal congruences, plus the identity.
pub fn congruences_from_principals(n: usize, principals: &[Partition]) -> Vec<Partition> {
    let words = principals.len().div_ceil(64).max(1);
    let mut found: Vec<Partition> = Vec::new();
    // principals already known to lie below each found congruence
    let mut absorbed: Vec<Vec<u64>> = Vec::new();
    let mut index: HashMap<Partition, usize> = HashMap::new();

    let identity = Partition::identity(n);
    index.insert(identity.clone(), 0);
    found.push(identity);
    absorbed.push(vec![0; words]);
    for (j, p) in principals.iter().enumerate() {
        let mut bits = vec![0; words];
        bits[j / 64] |= 1 << (j % 64);
        if let Some(&k) = index.get(p) {
            absorbed[k][j / 64] |= 1 << (j % 64);
            continue;
        }
        index.insert(p.clone(), found.len());
        found.push(p.clone());
        absorbed.push(bits);
    }

    let mut i = 1;
    while i < found.len() {
        for (j, p) in principals.iter().enumerate() {
            let (w, b) = (j / 64, 1u64 << (j % 64));
            if absorbed[i][w] & b != 0 {
                continue;
            }
            if p.is_contained_in(&found[i]) {
                absorbed[i][w] |= b;
                continue;
            }
            let joined = found[i].join(p).expect("equal lengths");
            let mut bits = absorbed[i].clone();
            bits[w] |= b;
            match index.get(&joined) {
                Some(&k) => {
                    for (dst, src) in absorbed[k].iter_mut().zip(&bits) {
                        *dst |= *src;
                    }
                }
                None => {
                    index.insert(joined.clone(), found.len());
                    found.push(joined);
                    absorbed.push(bits);
                }
            }
        }
        i += 1;
    }
    found.sort_unstable();
    found
}

/// Whether the algebra has a unique minimal nontrivial congruence.
pub fn is_monolithic(a: &Algebra) -> Result<bool> {
    if a.size() < 2 {
        return Err(Error::SizeTooSmall(a.size()));
    }
    let mut parts = all_principal_congruences(a);
    if parts.len() > 1 {
        let mut i = 1;
        loop {
            if parts[0].is_contained_in(&parts[i]) {
                parts.remove(i);
            } else if parts[i].is_contained_in(&parts[0]) {
                parts[0] = parts.remove(i);
                i = 1;
            } else {
                i += 1;
            }
            if parts.len() <= i {
                break;
            }
        }
    }
    Ok(parts.len() <= 1)
}

/// Direct check that `p` is compatible with every operation of `a`.
pub fn is_congruence(a: &Algebra, p: &Partition) -> bool {
    if p.len() != a.size() {
        return false;
    }
    let n = a.size();
    let root: Vec<usize> = (0..n).map(|x| p.find(x)).collect();
    a.unary_ops()
        .iter()
        .all(|u| (0..n).all(|x| root[u.apply(x)] == root[u.apply(root[x])]))
        && a.binary_ops().iter().all(|b| {
            (0..n).all(|x| {
                (0..n).all(|y| root[b.apply(x, y)] == root[b.apply(root[x], root[y])])
            })
        })
}
