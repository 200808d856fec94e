//! Finite algebras with binary and unary operations.
//!
//! Tables are stored zero-based internally. The serialized form
//! ([`AlgebraTables`]) is one-based and lists operations in index order;
//! two algebras are aligned operation-by-operation through that order.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::partition::Partition;

/// A binary operation given by its Cayley table (row-major, zero-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryOp {
    size: usize,
    cells: Vec<usize>,
}

impl BinaryOp {
    /// Builds a table from zero-based, row-major cells.
    pub fn new(size: usize, cells: Vec<usize>) -> Result<Self> {
        if cells.len() != size * size {
            return Err(Error::ShapeMismatch(format!(
                "binary table has {} cells, expected {}",
                cells.len(),
                size * size
            )));
        }
        if let Some(&v) = cells.iter().find(|&&v| v >= size) {
            return Err(Error::EntryOutOfRange {
                value: v + 1,
                size,
                location: "binary table".into(),
            });
        }
        Ok(BinaryOp { size, cells })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        Self::new(size, cells)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.size + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.size..(x + 1) * self.size]
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.size).map(|x| self.apply(x, y)).collect()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn transpose(&self) -> BinaryOp {
        let n = self.size;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[y * n + x] = self.apply(x, y);
            }
        }
        BinaryOp { size: n, cells }
    }

    pub fn is_associative(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.apply(x, y);
                (0..n).all(|z| self.apply(xy, z) == self.apply(x, self.apply(y, z)))
            })
        })
    }

    fn to_one_based(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.row(x).iter().map(|v| v + 1).collect())
            .collect()
    }
}

/// A unary operation given by its image list (zero-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnaryOp {
    images: Vec<usize>,
}

impl UnaryOp {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let size = images.len();
        if let Some(&v) = images.iter().find(|&&v| v >= size) {
            return Err(Error::EntryOutOfRange {
                value: v + 1,
                size,
                location: "unary table".into(),
            });
        }
        Ok(UnaryOp { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }
}

/// One-based serialized form of an algebra:
/// `{"size": n, "binary": [table, ...], "unary": [array, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTables {
    pub size: usize,
    #[serde(default)]
    pub binary: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub unary: Vec<Vec<usize>>,
}

impl AlgebraTables {
    pub fn new(size: usize, binary: Vec<Vec<Vec<usize>>>, unary: Vec<Vec<usize>>) -> Self {
        AlgebraTables {
            size,
            binary,
            unary,
        }
    }
}

/// Checks shapes and entry ranges of a one-based table set.
pub fn validate_algebra(t: &AlgebraTables) -> Result<()> {
    let n = t.size;
    if n == 0 {
        return Err(Error::ShapeMismatch("algebra size must be positive".into()));
    }
    for (k, table) in t.binary.iter().enumerate() {
        if table.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "binary operation {} has {} rows, expected {}",
                k + 1,
                table.len(),
                n
            )));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "binary operation {} row {} has {} entries, expected {}",
                    k + 1,
                    r + 1,
                    row.len(),
                    n
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::EntryOutOfRange {
                    value: v,
                    size: n,
                    location: format!("binary operation {} row {}", k + 1, r + 1),
                });
            }
        }
    }
    for (k, arr) in t.unary.iter().enumerate() {
        if arr.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "unary operation {} has {} entries, expected {}",
                k + 1,
                arr.len(),
                n
            )));
        }
        if let Some(&v) = arr.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::EntryOutOfRange {
                value: v,
                size: n,
                location: format!("unary operation {}", k + 1),
            });
        }
    }
    Ok(())
}

/// A finite algebra of type (2^m, 1^k) on the carrier `0..size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    size: usize,
    binary: Vec<BinaryOp>,
    unary: Vec<UnaryOp>,
}

impl Algebra {
    pub fn new(size: usize, binary: Vec<BinaryOp>, unary: Vec<UnaryOp>) -> Result<Self> {
        if size == 0 {
            return Err(Error::ShapeMismatch("algebra size must be positive".into()));
        }
        if let Some(b) = binary.iter().find(|b| b.size() != size) {
            return Err(Error::ShapeMismatch(format!(
                "binary table of size {} in algebra of size {}",
                b.size(),
                size
            )));
        }
        if let Some(u) = unary.iter().find(|u| u.size() != size) {
            return Err(Error::ShapeMismatch(format!(
                "unary table of size {} in algebra of size {}",
                u.size(),
                size
            )));
        }
        Ok(Algebra {
            size,
            binary,
            unary,
        })
    }

    /// An algebra with a single binary operation.
    pub fn magma(op: BinaryOp) -> Self {
        Algebra {
            size: op.size(),
            binary: vec![op],
            unary: Vec::new(),
        }
    }

    /// Parses a one-based Cayley table.
    pub fn magma_from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Algebra::from_tables(&AlgebraTables::new(rows.len(), vec![rows.to_vec()], vec![]))
    }

    pub fn from_tables(t: &AlgebraTables) -> Result<Self> {
        validate_algebra(t)?;
        let n = t.size;
        let binary = t
            .binary
            .iter()
            .map(|table| BinaryOp {
                size: n,
                cells: table.iter().flatten().map(|v| v - 1).collect(),
            })
            .collect();
        let unary = t
            .unary
            .iter()
            .map(|arr| UnaryOp {
                images: arr.iter().map(|v| v - 1).collect(),
            })
            .collect();
        Ok(Algebra {
            size: n,
            binary,
            unary,
        })
    }

    pub fn to_tables(&self) -> AlgebraTables {
        AlgebraTables {
            size: self.size,
            binary: self.binary.iter().map(BinaryOp::to_one_based).collect(),
            unary: self.unary.iter().map(UnaryOp::to_one_based).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn binary_ops(&self) -> &[BinaryOp] {
        &self.binary
    }

    pub fn unary_ops(&self) -> &[UnaryOp] {
        &self.unary
    }

    pub fn operation_count(&self) -> usize {
        self.binary.len() + self.unary.len()
    }

    /// Same number of binary and of unary operations.
    pub fn compatible(&self, other: &Algebra) -> bool {
        self.binary.len() == other.binary.len() && self.unary.len() == other.unary.len()
    }

    /// The isomorphic copy obtained by renaming each element `x` to `perm(x)`.
    pub fn relabel(&self, perm: &Mapping) -> Result<Algebra> {
        let inv = perm
            .inverse()
            .filter(|p| p.len() == self.size)
            .ok_or_else(|| Error::ShapeMismatch("relabeling is not a permutation".into()))?;
        let binary = self
            .binary
            .iter()
            .map(|b| {
                BinaryOp::from_fn(self.size, |x, y| {
                    perm.apply(b.apply(inv.apply(x), inv.apply(y)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let unary = self
            .unary
            .iter()
            .map(|u| UnaryOp::new((0..self.size).map(|x| perm.apply(u.apply(inv.apply(x)))).collect()))
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(self.size, binary, unary)
    }

    /// Whether `set` (given as a membership mask) is closed under every operation.
    pub fn is_closed(&self, members: &[bool]) -> bool {
        let elems: Vec<usize> = (0..self.size).filter(|&x| members[x]).collect();
        self.unary
            .iter()
            .all(|u| elems.iter().all(|&x| members[u.apply(x)]))
            && self.binary.iter().all(|b| {
                elems
                    .iter()
                    .all(|&x| elems.iter().all(|&y| members[b.apply(x, y)]))
            })
    }
}

pub fn compatible(a: &Algebra, b: &Algebra) -> bool {
    a.compatible(b)
}

/// The unary polynomial basis used by the principal congruence routine:
/// own unary operations, then every row map and every column map of each
/// binary operation, duplicates removed keeping first occurrences.
pub fn binary_to_unary(a: &Algebra) -> Vec<UnaryOp> {
    let n = a.size;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |images: Vec<usize>| {
        if !seen.contains(&images) {
            seen.insert(images.clone());
            out.push(UnaryOp { images });
        }
    };
    for u in &a.unary {
        push(u.images.clone());
    }
    for b in &a.binary {
        for x in 0..n {
            push(b.row(x).to_vec());
        }
        for x in 0..n {
            push(b.column(x));
        }
    }
    out
}

/// Result of collapsing an algebra by a congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: Algebra,
    /// Sends each element to the index of its block (blocks ordered by root).
    pub map_to_quotient: Mapping,
}

/// Builds `a / c`. Blocks are numbered by ascending root.
pub fn quotient_algebra(a: &Algebra, c: &Partition) -> Result<QuotientResult> {
    if c.len() != a.size {
        return Err(Error::LengthMismatch(c.len(), a.size));
    }
    let mut c = c.clone();
    c.normalize();
    if !crate::congruence::is_congruence(a, &c) {
        return Err(Error::NotACongruence);
    }
    let roots: Vec<usize> = (0..a.size).filter(|&x| c.is_root(x)).collect();
    let mut index_of_root = vec![usize::MAX; a.size];
    for (k, &r) in roots.iter().enumerate() {
        index_of_root[r] = k;
    }
    let class: Vec<usize> = (0..a.size).map(|x| index_of_root[c.find(x)]).collect();
    let q = roots.len();
    let binary = a
        .binary
        .iter()
        .map(|b| BinaryOp::from_fn(q, |i, j| class[b.apply(roots[i], roots[j])]))
        .collect::<Result<Vec<_>>>()?;
    let unary = a
        .unary
        .iter()
        .map(|u| UnaryOp::new(roots.iter().map(|&r| class[u.apply(r)]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientResult {
        quotient: Algebra::new(q, binary, unary)?,
        map_to_quotient: Mapping::new(class),
    })
}

/// Restricts `a` to the closed set `s`, relabeled by ascending element order.
///
/// The returned vector maps each new element to its original element.
pub fn subalgebra_from_universe(a: &Algebra, s: &[usize]) -> Result<(Algebra, Vec<usize>)> {
    let mut elems: Vec<usize> = s.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if elems.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if let Some(&x) = elems.iter().find(|&&x| x >= a.size) {
        return Err(Error::IndexOutOfRange {
            index: x,
            size: a.size,
        });
    }
    let mut index = vec![usize::MAX; a.size];
    for (k, &x) in elems.iter().enumerate() {
        index[x] = k;
    }
    let m = elems.len();
    let mut binary = Vec::with_capacity(a.binary.len());
    for b in &a.binary {
        let mut cells = Vec::with_capacity(m * m);
        for &x in &elems {
            for &y in &elems {
                let z = index[b.apply(x, y)];
                if z == usize::MAX {
                    return Err(Error::NotClosed);
                }
                cells.push(z);
            }
        }
        binary.push(BinaryOp { size: m, cells });
    }
    let mut unary = Vec::with_capacity(a.unary.len());
    for u in &a.unary {
        let mut images = Vec::with_capacity(m);
        for &x in &elems {
            let z = index[u.apply(x)];
            if z == usize::MAX {
                return Err(Error::NotClosed);
            }
            images.push(z);
        }
        unary.push(UnaryOp { images });
    }
    Ok((Algebra::new(m, binary, unary)?, elems))
}
