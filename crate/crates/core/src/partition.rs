//! Partitions as union-find forests.
//!
//! Each slot holds either a negative number (the slot is a root and the
//! absolute value is the size of its block) or the index of its parent.
//! A partition is *normalized* when every non-root points directly at its
//! root and every root is the smallest element of its block; normalized
//! partitions have a unique encoding and are the only ones stored in sets.
//!
//! Parents are zero-based in memory. [`Partition::from_encoding`] and
//! [`Partition::encoding`] use the one-based form, e.g. `[-2, -1, -2, -1, 3, 1]`
//! for the blocks `[[1, 6], [2], [3, 5], [4]]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    data: Vec<isize>,
}

impl Partition {
    /// The partition into singletons (the identity relation).
    pub fn identity(n: usize) -> Self {
        Partition { data: vec![-1; n] }
    }

    /// The partition with a single block.
    pub fn one_block(n: usize) -> Self {
        let mut data = vec![0; n];
        if n > 0 {
            data[0] = -(n as isize);
        }
        Partition { data }
    }

    /// Parses the one-based array encoding. The forest may be deep or
    /// non-normalized but must be acyclic with consistent block sizes.
    pub fn from_encoding(enc: &[isize]) -> Result<Self> {
        let n = enc.len();
        let mut data = Vec::with_capacity(n);
        for &v in enc {
            if v == 0 || v > n as isize {
                return Err(Error::InvalidPartition(format!("entry {v} for length {n}")));
            }
            data.push(if v > 0 { v - 1 } else { v });
        }
        let p = Partition { data };
        p.check_forest()?;
        Ok(p)
    }

    /// Builds a normalized partition from zero-based blocks covering `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (k, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
                if label[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {} repeated", x + 1)));
                }
                label[x] = k;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover the set".into()));
        }
        Ok(Self::from_labels(&label))
    }

    /// Normalized partition whose blocks are the fibres of `label`.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(label: &[T]) -> Self {
        let mut root_of: HashMap<T, usize> = HashMap::new();
        let mut data = vec![0isize; label.len()];
        for (x, l) in label.iter().enumerate() {
            match root_of.get(l) {
                Some(&r) => {
                    data[x] = r as isize;
                    data[r] -= 1;
                }
                None => {
                    root_of.insert(*l, x);
                    data[x] = -1;
                }
            }
        }
        Partition { data }
    }

    fn check_forest(&self) -> Result<()> {
        let n = self.data.len();
        let mut sizes = vec![0isize; n];
        for i in 0..n {
            let mut j = i;
            let mut steps = 0;
            while self.data[j] >= 0 {
                j = self.data[j] as usize;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidPartition("cycle in parent links".into()));
                }
            }
            sizes[j] += 1;
        }
        for (i, (&v, &size)) in self.data.iter().zip(&sizes).enumerate() {
            if v < 0 && -v != size {
                return Err(Error::InvalidPartition(format!(
                    "root {} records size {} but has {} members",
                    i + 1,
                    -v,
                    size
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Raw zero-based slots.
    pub fn raw(&self) -> &[isize] {
        &self.data
    }

    /// The one-based array encoding.
    pub fn encoding(&self) -> Vec<isize> {
        self.data
            .iter()
            .map(|&v| if v < 0 { v } else { v + 1 })
            .collect()
    }

    #[inline]
    pub fn is_root(&self, i: usize) -> bool {
        self.data[i] < 0
    }

    /// Root of `i` without modifying the forest.
    #[inline]
    pub fn find(&self, i: usize) -> usize {
        let mut j = i;
        while self.data[j] >= 0 {
            j = self.data[j] as usize;
        }
        j
    }

    /// Root of `i`; re-points `i` directly at that root.
    pub fn root_block(&mut self, i: usize) -> Result<usize> {
        if i >= self.data.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.data.len(),
            });
        }
        Ok(self.root(i))
    }

    #[inline]
    pub(crate) fn root(&mut self, i: usize) -> usize {
        let j = self.find(i);
        if i != j {
            self.data[i] = j as isize;
        }
        j
    }

    /// Merges the blocks of `x` and `y`. The root of the larger block
    /// survives; on equal sizes the root of `y`'s block does.
    ///
    /// Panics if either element is out of range.
    pub fn join_blocks(&mut self, x: usize, y: usize) {
        let r = self.root(x);
        let s = self.root(y);
        if r != s {
            if self.data[r] < self.data[s] {
                self.data[r] += self.data[s];
                self.data[s] = r as isize;
            } else {
                self.data[s] += self.data[r];
                self.data[r] = s as isize;
            }
        }
    }

    pub fn number_of_blocks(&self) -> usize {
        self.data.iter().filter(|&&v| v < 0).count()
    }

    /// Makes the forest shallow with each block rooted at its smallest element.
    pub fn normalize(&mut self) {
        for i in 0..self.data.len() {
            let r = self.root(i);
            if r >= i {
                self.data[i] = -1;
                if r > i {
                    self.data[r] = i as isize;
                }
            } else {
                self.data[r] -= 1;
            }
        }
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn is_normalized(&self) -> bool {
        self.data.iter().enumerate().all(|(i, &v)| {
            v < 0 || {
                let r = v as usize;
                r < i && self.data[r] < 0
            }
        })
    }

    /// Accumulates the join of `self` and `target` into `target`.
    /// The result is generally not normalized.
    pub fn join_into(&self, target: &mut Partition) -> Result<()> {
        if self.len() != target.len() {
            return Err(Error::LengthMismatch(self.len(), target.len()));
        }
        for i in 0..self.len() {
            let r = self.find(i);
            target.join_blocks(i, r);
        }
        Ok(())
    }

    /// Normalized join (finest common coarsening).
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        let mut out = other.clone();
        self.join_into(&mut out)?;
        out.normalize();
        Ok(out)
    }

    /// Normalized meet (blocks are the non-empty pairwise intersections).
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let keys: Vec<(usize, usize)> = (0..self.len())
            .map(|i| (self.find(i), other.find(i)))
            .collect();
        Ok(Partition::from_labels(&keys))
    }

    /// Three-way comparison of normalized partitions: 0 if equal, -1 if the
    /// first differing slot of `self` is larger, 1 if it is smaller.
    pub fn compare(&self, other: &Partition) -> i8 {
        match self.cmp(other) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() == other.len()
            && (0..self.len()).all(|i| other.find(i) == other.find(self.find(i)))
    }

    /// Blocks as sorted zero-based element lists, ordered by smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.len() {
            let r = self.find(i);
            let k = *index.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[k].push(i);
        }
        blocks
    }

    /// Blocks in one-based form, e.g. `[[1, 6], [2], [3, 5], [4]]`.
    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|x| x + 1).collect())
            .collect()
    }
}

/// Set order on partitions: descending lexicographic order of the encoding,
/// so `[-1, ...]` sorts before `[-2, ...]`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.data.cmp(&self.data)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.encoding().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Number of set partitions of an `n`-element set.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(v: &[isize]) -> Partition {
        Partition::from_encoding(v).unwrap()
    }

    #[test]
    fn encodings_from_blocks() {
        let cases: [(&[&[usize]], &[isize]); 3] = [
            (&[&[1, 6], &[2], &[3, 5], &[4]], &[-2, -1, -2, -1, 3, 1]),
            (&[&[1, 3, 5], &[2, 6], &[4]], &[-3, -2, 1, -1, 1, 2]),
            (&[&[1, 2, 5, 6], &[3, 4]], &[-4, 1, -2, 3, 1, 1]),
        ];
        for (blocks, expected) in cases {
            let zero: Vec<Vec<usize>> = blocks
                .iter()
                .map(|b| b.iter().map(|x| x - 1).collect())
                .collect();
            let p = Partition::from_blocks(6, &zero).unwrap();
            assert_eq!(p.encoding(), expected);
            let back: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
            assert_eq!(enc(expected).blocks_one_based(), back);
        }
        assert_eq!(Partition::identity(6).encoding(), vec![-1; 6]);
        assert_eq!(Partition::one_block(6).encoding(), vec![-6, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_encodings() {
        assert!(Partition::from_encoding(&[-1, 0]).is_err());
        assert!(Partition::from_encoding(&[2, 1]).is_err());
        assert!(Partition::from_encoding(&[-3, 1]).is_err());
        assert!(Partition::from_encoding(&[-1, 3]).is_err());
    }

    #[test]
    fn root_block_examples() {
        let mut p = enc(&[-2, -1, -2, -1, 3, 1]);
        assert_eq!(p.root_block(4).unwrap(), 2);
        let mut id = Partition::identity(3);
        assert_eq!(id.root_block(1).unwrap(), 1);
        let mut chain = enc(&[-3, 1, 2]);
        assert_eq!(chain.root_block(2).unwrap(), 0);
        assert_eq!(chain.encoding(), vec![-3, 1, 1]);
        assert!(matches!(
            chain.root_block(3),
            Err(Error::IndexOutOfRange { index: 3, size: 3 })
        ));
    }

    #[test]
    fn join_blocks_examples() {
        let mut p = Partition::identity(6);
        p.join_blocks(2, 2);
        assert_eq!(p, Partition::identity(6));
        p.join_blocks(0, 5);
        p.join_blocks(2, 4);
        assert_eq!(p.number_of_blocks(), 4);
        // equal sizes: the second argument's root survives
        assert_eq!(p.find(0), 5);
        assert_eq!(p.find(2), 4);
        assert_eq!(p.normalized().encoding(), vec![-2, -1, -2, -1, 3, 1]);

        let mut q = Partition::from_blocks(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        q.join_blocks(3, 1);
        assert_eq!(q.find(3), 0);
        assert_eq!(q.raw()[0], -4);
    }

    #[test]
    fn number_of_blocks_examples() {
        assert_eq!(Partition::identity(6).number_of_blocks(), 6);
        assert_eq!(enc(&[-6, 1, 1, 1, 1, 1]).number_of_blocks(), 1);
        assert_eq!(enc(&[-2, -1, -2, -1, 3, 1]).number_of_blocks(), 4);
    }

    #[test]
    fn normalize_examples() {
        let mut p = enc(&[-3, 1, 2]);
        p.normalize();
        assert_eq!(p.encoding(), vec![-3, 1, 1]);
        let before = p.clone();
        p.normalize();
        assert_eq!(p, before);

        // block {1,3,5} rooted at 3, with 5 hanging below 1
        let mut q = enc(&[3, -1, -3, -1, 1]);
        q.normalize();
        assert_eq!(q.encoding(), vec![-3, -1, 1, -1, 1]);
        assert!(q.is_normalized());
    }

    #[test]
    fn join_examples() {
        let p = enc(&[-2, 1, -2, 3, -1]);
        assert_eq!(Partition::identity(5).join(&p).unwrap(), p);
        assert_eq!(p.join(&Partition::one_block(5)).unwrap(), Partition::one_block(5));
        let a = Partition::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let b = Partition::from_blocks(4, &[vec![1, 2], vec![0], vec![3]]).unwrap();
        assert_eq!(a.join(&b).unwrap().blocks_one_based(), vec![vec![1, 2, 3], vec![4]]);
        assert_eq!(
            a.join(&Partition::identity(5)).unwrap_err(),
            Error::LengthMismatch(4, 5)
        );
    }

    #[test]
    fn meet_examples() {
        let p = enc(&[-2, 1, -2, 3, -1]);
        assert_eq!(p.meet(&Partition::one_block(5)).unwrap(), p);
        assert_eq!(p.meet(&Partition::identity(5)).unwrap(), Partition::identity(5));
        let a = Partition::from_blocks(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        let b = Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            a.meet(&b).unwrap().blocks_one_based(),
            vec![vec![1, 2], vec![3], vec![4]]
        );
    }

    #[test]
    fn compare_examples() {
        let a = enc(&[-2, 1, -1]);
        let b = enc(&[-1, -2, 2]);
        assert_eq!(a.compare(&a.clone()), 0);
        assert_eq!(a.compare(&b), 1);
        assert_eq!(b.compare(&a), -1);
    }

    #[test]
    fn containment_examples() {
        let p = enc(&[-2, 1, -1, -1]);
        let q = enc(&[-1, -2, 2, -1]);
        assert!(Partition::identity(4).is_contained_in(&p));
        assert!(p.is_contained_in(&Partition::one_block(4)));
        assert!(!p.is_contained_in(&q));
        assert!(p.is_contained_in(&p));
    }

    #[test]
    fn bell_numbers() {
        let expected = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), b);
        }
    }
}
