use std::fmt;

use serde::{Deserialize, Serialize};

/// A total function between two carriers, stored as zero-based images.
///
/// Displayed and serialized one-based, e.g. `[1, 1, 1, 2, 3, 3]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mapping(Vec<usize>);

impl Mapping {
    pub fn new(images: Vec<usize>) -> Self {
        Mapping(images)
    }

    pub fn identity(n: usize) -> Self {
        Mapping((0..n).collect())
    }

    /// Builds a mapping from one-based images.
    pub fn from_one_based(images: &[usize]) -> Self {
        Mapping(images.iter().map(|&v| v - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `then ∘ self`: apply `self` first, then `then`.
    pub fn then(&self, then: &Mapping) -> Mapping {
        Mapping(self.0.iter().map(|&x| then.0[x]).collect())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.0.len());
        self.0.iter().all(|v| seen.insert(*v))
    }

    /// Whether every element of `0..codomain` is hit.
    pub fn is_surjective(&self, codomain: usize) -> bool {
        let mut hit = vec![false; codomain];
        for &v in &self.0 {
            if v < codomain {
                hit[v] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// Inverse of a permutation; `None` if the mapping is not a bijection of its length.
    pub fn inverse(&self) -> Option<Mapping> {
        let n = self.0.len();
        let mut inv = vec![usize::MAX; n];
        for (x, &y) in self.0.iter().enumerate() {
            if y >= n || inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(Mapping(inv))
    }
}

impl fmt::Display for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mapping {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mapping {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("mapping images are one-based"));
        }
        Ok(Mapping::from_one_based(&v))
    }
}
