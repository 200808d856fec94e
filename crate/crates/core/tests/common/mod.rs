#![allow(dead_code)]

use finalg::{quotient_algebra, Algebra, BinaryOp, Partition, UnaryOp};
use rand::Rng;

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn constant_one(n: usize) -> Algebra {
    Algebra::magma(BinaryOp::from_fn(n, |_, _| 0).unwrap())
}

pub fn algebra_6_19() -> Algebra {
    let mut rows = vec![vec![1; 6]; 4];
    rows.push(vec![1, 1, 1, 2, 1, 1]);
    rows.push(vec![1, 1, 2, 1, 1, 1]);
    Algebra::magma_from_rows(&rows).unwrap()
}

pub fn six_element() -> Algebra {
    let mut rows = vec![vec![1; 6]; 5];
    rows.push(vec![1, 1, 1, 2, 3, 1]);
    Algebra::magma_from_rows(&rows).unwrap()
}

pub fn cyclic(n: usize) -> Algebra {
    Algebra::magma(BinaryOp::from_fn(n, |x, y| (x + y) % n).unwrap())
}

/// Random algebra with the given signature. Entries of each table are drawn
/// from a random prefix of the carrier so that many tables have nontrivial
/// congruences and subuniverses.
pub fn random_algebra(rng: &mut impl Rng, n: usize, binary: usize, unary: usize) -> Algebra {
    let b = (0..binary)
        .map(|_| {
            let k = rng.gen_range(1..=n);
            let cells = (0..n * n).map(|_| rng.gen_range(0..k)).collect();
            BinaryOp::new(n, cells).unwrap()
        })
        .collect();
    let u = (0..unary)
        .map(|_| {
            let k = rng.gen_range(1..=n);
            UnaryOp::new((0..n).map(|_| rng.gen_range(0..k)).collect()).unwrap()
        })
        .collect();
    Algebra::new(n, b, u).unwrap()
}

/// Random signature with at least one operation.
pub fn random_signature(rng: &mut impl Rng) -> (usize, usize) {
    loop {
        let s = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        if s != (0, 0) {
            return s;
        }
    }
}

/// Direct product on pairs `(x, y)` numbered `x·|b| + y`.
pub fn product(a: &Algebra, b: &Algebra) -> Algebra {
    let (n, m) = (a.size(), b.size());
    let binary = a
        .binary_ops()
        .iter()
        .zip(b.binary_ops())
        .map(|(p, q)| {
            BinaryOp::from_fn(n * m, |u, v| {
                p.apply(u / m, v / m) * m + q.apply(u % m, v % m)
            })
            .unwrap()
        })
        .collect();
    let unary = a
        .unary_ops()
        .iter()
        .zip(b.unary_ops())
        .map(|(f, g)| {
            UnaryOp::new((0..n * m).map(|u| f.apply(u / m) * m + g.apply(u % m)).collect())
                .unwrap()
        })
        .collect();
    Algebra::new(n * m, binary, unary).unwrap()
}

/// Quotient by a randomly chosen congruence.
pub fn random_quotient(rng: &mut impl Rng, a: &Algebra) -> Algebra {
    let cs = finalg::all_congruences(a);
    let c: &Partition = &cs[rng.gen_range(0..cs.len())];
    quotient_algebra(a, c).unwrap().quotient
}
