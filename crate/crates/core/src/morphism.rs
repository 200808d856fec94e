//! Homomorphism searches: automorphisms, endomorphisms, monomorphisms,
//! epimorphisms and isomorphisms.
//!
//! All searches share one backtracking engine. Images are chosen only for a
//! generating set of the source; every other image is forced by the
//! operations, so each choice is propagated through the tables and the
//! branch dies at the first conflict.

use rayon::prelude::*;

use crate::algebra::{quotient_algebra, Algebra};
use crate::congruence::all_congruences;
use crate::error::{Error, Result};
use crate::fingerprint::{
    all_invariant_vectors, efficient_generating_set, element_blocks, greedy_generating_set,
    unary_fingerprints, ElementBlocks, InvariantVector, UnaryFingerprint,
};
use crate::mapping::Mapping;
use crate::partition::Partition;

/// Algebras larger than this use the congruence-based endomorphism search.
pub const DEFAULT_ENDOMORPHISM_THRESHOLD: usize = 60;

const UNSET: usize = usize::MAX;

/// Whether `f` is a homomorphism from `a` to `b`.
pub fn is_homomorphism(f: &Mapping, a: &Algebra, b: &Algebra) -> Result<bool> {
    if !a.compatible(b) {
        return Err(Error::IncompatibleAlgebras);
    }
    if f.len() != a.size() {
        return Err(Error::LengthMismatch(f.len(), a.size()));
    }
    if f.images().iter().any(|&v| v >= b.size()) {
        return Ok(false);
    }
    let n = a.size();
    let binary_ok = a.binary_ops().iter().zip(b.binary_ops()).all(|(p, q)| {
        (0..n).all(|x| (0..n).all(|y| f.apply(p.apply(x, y)) == q.apply(f.apply(x), f.apply(y))))
    });
    let unary_ok = a
        .unary_ops()
        .iter()
        .zip(b.unary_ops())
        .all(|(u, v)| (0..n).all(|x| f.apply(u.apply(x)) == v.apply(f.apply(x))));
    Ok(binary_ok && unary_ok)
}

/// Allowed image pairs, `allowed[x * target_size + y]`.
struct Allowed {
    target_size: usize,
    mask: Vec<bool>,
}

impl Allowed {
    fn all(source: usize, target: usize) -> Self {
        Allowed {
            target_size: target,
            mask: vec![true; source * target],
        }
    }

    fn from_fn(source: usize, target: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut mask = Vec::with_capacity(source * target);
        for x in 0..source {
            for y in 0..target {
                mask.push(f(x, y));
            }
        }
        Allowed {
            target_size: target,
            mask,
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> bool {
        self.mask[x * self.target_size + y]
    }
}

struct Search<'a> {
    source: &'a Algebra,
    target: &'a Algebra,
    generators: Vec<usize>,
    allowed: Allowed,
    injective: bool,
}

#[derive(Clone)]
struct State {
    image: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new_state(&self) -> State {
        State {
            image: vec![UNSET; self.source.size()],
            used: vec![false; self.target.size()],
            order: Vec::with_capacity(self.source.size()),
        }
    }

    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        if !self.allowed.get(x, y) || (self.injective && st.used[y]) {
            return false;
        }
        st.image[x] = y;
        st.used[y] = true;
        st.order.push(x);
        true
    }

    fn require(&self, st: &mut State, z: usize, w: usize) -> bool {
        match st.image[z] {
            UNSET => self.assign(st, z, w),
            v => v == w,
        }
    }

    /// Forces images of everything reachable from the elements assigned
    /// since `from`; every pair of assigned elements gets checked once.
    fn propagate(&self, st: &mut State, from: usize) -> bool {
        let mut q = from;
        while q < st.order.len() {
            let x = st.order[q];
            let fx = st.image[x];
            for (p, t) in self.source.binary_ops().iter().zip(self.target.binary_ops()) {
                for k in 0..=q {
                    let y = st.order[k];
                    let fy = st.image[y];
                    if !self.require(st, p.apply(x, y), t.apply(fx, fy)) {
                        return false;
                    }
                    if y != x && !self.require(st, p.apply(y, x), t.apply(fy, fx)) {
                        return false;
                    }
                }
            }
            for (u, v) in self.source.unary_ops().iter().zip(self.target.unary_ops()) {
                if !self.require(st, u.apply(x), v.apply(fx)) {
                    return false;
                }
            }
            q += 1;
        }
        true
    }

    fn undo(&self, st: &mut State, mark: usize) {
        while st.order.len() > mark {
            let x = st.order.pop().unwrap();
            st.used[st.image[x]] = false;
            st.image[x] = UNSET;
        }
    }

    /// Tries `x ↦ y` on top of the current state.
    fn try_branch(&self, st: &mut State, x: usize, y: usize) -> bool {
        let mark = st.order.len();
        if self.assign(st, x, y) && self.propagate(st, mark) {
            true
        } else {
            self.undo(st, mark);
            false
        }
    }

    fn dfs(&self, st: &mut State, depth: usize, out: &mut Vec<Mapping>, first_only: bool) -> bool {
        if depth == self.generators.len() {
            debug_assert!(st.image.iter().all(|&v| v != UNSET));
            out.push(Mapping::new(st.image.clone()));
            return first_only;
        }
        let g = self.generators[depth];
        if st.image[g] != UNSET {
            return self.dfs(st, depth + 1, out, first_only);
        }
        for y in 0..self.target.size() {
            let mark = st.order.len();
            if self.try_branch(st, g, y) {
                let stop = self.dfs(st, depth + 1, out, first_only);
                self.undo(st, mark);
                if stop {
                    return true;
                }
            }
        }
        false
    }

    fn branch_from(&self, y: usize, first_only: bool) -> Vec<Mapping> {
        let mut st = self.new_state();
        let mut out = Vec::new();
        if self.try_branch(&mut st, self.generators[0], y) {
            self.dfs(&mut st, 1, &mut out, first_only);
        }
        out
    }

    /// All solutions, sorted. Branches on the first generator run in parallel.
    fn run_all(&self) -> Vec<Mapping> {
        if self.generators.is_empty() {
            return Vec::new();
        }
        let mut out: Vec<Mapping> = (0..self.target.size())
            .into_par_iter()
            .flat_map_iter(|y| self.branch_from(y, false))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The solution found first in sequential search order.
    fn run_one(&self) -> Option<Mapping> {
        if self.generators.is_empty() {
            return None;
        }
        (0..self.target.size())
            .into_par_iter()
            .find_map_first(|y| self.branch_from(y, true).into_iter().next())
    }
}

/// Per-element key combining all invariant vectors and unary fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    binary: Vec<InvariantVector>,
    unary: UnaryFingerprint,
}

fn signatures(a: &Algebra) -> Vec<Signature> {
    let per_op: Vec<Vec<InvariantVector>> = a.binary_ops().iter().map(all_invariant_vectors).collect();
    unary_fingerprints(a)
        .into_iter()
        .enumerate()
        .map(|(x, unary)| Signature {
            binary: per_op.iter().map(|v| v[x]).collect(),
            unary,
        })
        .collect()
}

fn signature_blocks(a: &Algebra) -> ElementBlocks {
    ElementBlocks::from_keys(&signatures(a))
}

/// All automorphisms of a single binary operation, sorted.
pub fn magma_automorphisms(m: &crate::algebra::BinaryOp) -> Vec<Mapping> {
    let a = Algebra::magma(m.clone());
    let vectors = all_invariant_vectors(m);
    let blocks = element_blocks(m);
    let search = Search {
        source: &a,
        target: &a,
        generators: efficient_generating_set(m, &blocks),
        allowed: Allowed::from_fn(m.size(), m.size(), |x, y| vectors[x] == vectors[y]),
        injective: true,
    };
    search.run_all()
}

fn commutes_with_unary(h: &Mapping, a: &Algebra) -> bool {
    a.unary_ops()
        .iter()
        .all(|u| (0..a.size()).all(|x| h.apply(u.apply(x)) == u.apply(h.apply(x))))
}

fn preserves_binary(h: &Mapping, op: &crate::algebra::BinaryOp) -> bool {
    let n = op.size();
    (0..n).all(|x| (0..n).all(|y| h.apply(op.apply(x, y)) == op.apply(h.apply(x), h.apply(y))))
}

/// All automorphisms of `a`, sorted.
///
/// The automorphisms of the first binary operation are filtered by
/// commutation with the unary operations and then intersected with each
/// further binary operation, stopping once only the identity remains.
pub fn algebra_automorphisms(a: &Algebra) -> Result<Vec<Mapping>> {
    if a.operation_count() == 0 {
        return Err(Error::NoOperations);
    }
    let n = a.size();
    let Some((first, rest)) = a.binary_ops().split_first() else {
        return Ok(unary_automorphisms(a));
    };
    let mut autos: Vec<Mapping> = magma_automorphisms(first)
        .into_iter()
        .filter(|h| commutes_with_unary(h, a))
        .collect();
    for op in rest {
        if autos.len() <= 1 {
            break;
        }
        autos.retain(|h| preserves_binary(h, op));
    }
    debug_assert!(autos.contains(&Mapping::identity(n)));
    Ok(autos)
}

fn unary_automorphisms(a: &Algebra) -> Vec<Mapping> {
    let n = a.size();
    let fps = unary_fingerprints(a);
    let blocks = ElementBlocks::from_keys(&fps);
    let search = Search {
        source: a,
        target: a,
        generators: greedy_generating_set(a, &blocks),
        allowed: Allowed::from_fn(n, n, |x, y| fps[x] == fps[y]),
        injective: true,
    };
    search.run_all()
}

/// All endomorphisms by direct backtracking over generator images, sorted.
pub fn classic_endomorphisms(a: &Algebra) -> Vec<Mapping> {
    let n = a.size();
    let search = Search {
        source: a,
        target: a,
        generators: greedy_generating_set(a, &signature_blocks(a)),
        allowed: Allowed::all(n, n),
        injective: false,
    };
    search.run_all()
}

/// Endomorphisms assembled from the congruences: for each non-identity
/// congruence, every embedding of the quotient back into `a` composed with
/// the quotient map; plus the automorphisms. Sorted.
pub fn congruence_endomorphisms(a: &Algebra) -> Vec<Mapping> {
    let n = a.size();
    let congruences: Vec<Partition> = all_congruences(a)
        .into_iter()
        .filter(|c| c.number_of_blocks() < n)
        .collect();
    let mut out: Vec<Mapping> = congruences
        .par_iter()
        .flat_map_iter(|c| {
            let q = quotient_algebra(a, c).expect("congruence from all_congruences");
            let embeddings = all_monomorphisms(&q.quotient, a).expect("quotient is compatible");
            embeddings
                .into_iter()
                .map(move |g| q.map_to_quotient.then(&g))
                .collect::<Vec<_>>()
        })
        .collect();
    match algebra_automorphisms(a) {
        Ok(autos) => out.extend(autos),
        Err(_) => out.extend(
            all_monomorphisms(a, a).expect("an algebra is compatible with itself"),
        ),
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All endomorphisms, choosing the search method by size.
pub fn endomorphisms(a: &Algebra) -> Vec<Mapping> {
    endomorphisms_with_threshold(a, DEFAULT_ENDOMORPHISM_THRESHOLD)
}

/// Classic search up to `threshold` elements, congruence-based above.
pub fn endomorphisms_with_threshold(a: &Algebra, threshold: usize) -> Vec<Mapping> {
    if a.size() <= threshold {
        classic_endomorphisms(a)
    } else {
        congruence_endomorphisms(a)
    }
}

fn injective_search<'a>(a: &'a Algebra, b: &'a Algebra) -> Result<Option<Search<'a>>> {
    if !a.compatible(b) {
        return Err(Error::IncompatibleAlgebras);
    }
    if a.size() > b.size() {
        return Ok(None);
    }
    let allowed = if a.size() == b.size() {
        let sa = signatures(a);
        let sb = signatures(b);
        Allowed::from_fn(a.size(), b.size(), |x, y| sa[x] == sb[y])
    } else if let (Some(pa), Some(pb)) = (a.binary_ops().first(), b.binary_ops().first()) {
        let va = all_invariant_vectors(pa);
        let vb = all_invariant_vectors(pb);
        Allowed::from_fn(a.size(), b.size(), |x, y| va[x].embeds_into(&vb[y]))
    } else {
        let fa = unary_fingerprints(a);
        let fb = unary_fingerprints(b);
        Allowed::from_fn(a.size(), b.size(), |x, y| fa[x].embeds_into(&fb[y]))
    };
    Ok(Some(Search {
        source: a,
        target: b,
        generators: greedy_generating_set(a, &signature_blocks(a)),
        allowed,
        injective: true,
    }))
}

/// All injective homomorphisms `a → b`, sorted.
pub fn all_monomorphisms(a: &Algebra, b: &Algebra) -> Result<Vec<Mapping>> {
    Ok(injective_search(a, b)?.map(|s| s.run_all()).unwrap_or_default())
}

pub fn one_monomorphism(a: &Algebra, b: &Algebra) -> Result<Option<Mapping>> {
    Ok(injective_search(a, b)?.and_then(|s| s.run_one()))
}

pub fn exists_monomorphism(a: &Algebra, b: &Algebra) -> Result<bool> {
    Ok(one_monomorphism(a, b)?.is_some())
}

/// An isomorphism `a → b`, if one exists.
pub fn are_isomorphic(a: &Algebra, b: &Algebra) -> Result<Option<Mapping>> {
    if !a.compatible(b) {
        return Err(Error::IncompatibleAlgebras);
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    one_monomorphism(a, b)
}

fn target_automorphisms(b: &Algebra) -> Vec<Mapping> {
    algebra_automorphisms(b).unwrap_or_else(|_| {
        all_monomorphisms(b, b).expect("an algebra is compatible with itself")
    })
}

fn epimorphism_search(a: &Algebra, b: &Algebra, first_only: bool) -> Result<Vec<Mapping>> {
    if !a.compatible(b) {
        return Err(Error::IncompatibleAlgebras);
    }
    let mut autos: Option<Vec<Mapping>> = None;
    let mut out = Vec::new();
    for c in all_congruences(a) {
        if c.number_of_blocks() != b.size() {
            continue;
        }
        let q = quotient_algebra(a, &c)?;
        let Some(iso) = are_isomorphic(&q.quotient, b)? else {
            continue;
        };
        let via_iso = q.map_to_quotient.then(&iso);
        if first_only {
            out.push(via_iso);
            return Ok(out);
        }
        let autos = autos.get_or_insert_with(|| target_automorphisms(b));
        out.extend(autos.iter().map(|h| via_iso.then(h)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All surjective homomorphisms `a → b`, sorted.
pub fn all_epimorphisms(a: &Algebra, b: &Algebra) -> Result<Vec<Mapping>> {
    epimorphism_search(a, b, false)
}

pub fn one_epimorphism(a: &Algebra, b: &Algebra) -> Result<Option<Mapping>> {
    Ok(epimorphism_search(a, b, true)?.into_iter().next())
}

pub fn exists_epimorphism(a: &Algebra, b: &Algebra) -> Result<bool> {
    Ok(one_epimorphism(a, b)?.is_some())
}
