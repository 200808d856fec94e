//! Rees matrix semigroups over cyclic groups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, BinaryOp};
use crate::error::{Error, Result};

/// Builds the Rees matrix semigroup `M[Z_g; rows, cols; P]`.
///
/// Elements are triples `(i, g, λ)` numbered `i·(G·C) + g·C + λ` (0-based),
/// with product `(i, g, λ)(j, h, μ) = (i, g + P[λ][j] + h, μ)`.
/// `sandwich` is `cols × rows` with entries in `1..=group_order`, where
/// entry `k` stands for the group element `k - 1`. When absent it is drawn
/// from a generator seeded with `seed`.
pub fn rees_matrix_semigroup(
    group_order: usize,
    rows: usize,
    cols: usize,
    sandwich: Option<&[Vec<usize>]>,
    seed: u64,
) -> Result<Algebra> {
    if group_order == 0 || rows == 0 || cols == 0 {
        return Err(Error::BadSandwich(
            "group order, rows and cols must be positive".into(),
        ));
    }
    let p: Vec<Vec<usize>> = match sandwich {
        Some(s) => {
            if s.len() != cols || s.iter().any(|r| r.len() != rows) {
                return Err(Error::BadSandwich(format!("expected {cols} rows of length {rows}")));
            }
            let mut p = Vec::with_capacity(cols);
            for r in s {
                let mut out = Vec::with_capacity(rows);
                for &v in r {
                    if v == 0 || v > group_order {
                        return Err(Error::BadSandwich(format!(
                            "entry {v} not in 1..={group_order}"
                        )));
                    }
                    out.push(v - 1);
                }
                p.push(out);
            }
            p
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..cols)
                .map(|_| (0..rows).map(|_| rng.gen_range(0..group_order)).collect())
                .collect()
        }
    };
    let (g, c) = (group_order, cols);
    let n = rows * g * c;
    let split = |x: usize| (x / (g * c), x / c % g, x % c);
    let op = BinaryOp::from_fn(n, |x, y| {
        let (i, a, l) = split(x);
        let (j, b, m) = split(y);
        i * g * c + (a + p[l][j] + b) % g * c + m
    })?;
    Ok(Algebra::magma(op))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_is_rectangular_band() {
        let s = rees_matrix_semigroup(1, 2, 2, Some(&[vec![1, 1], vec![1, 1]]), 0).unwrap();
        let op = &s.binary_ops()[0];
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(op.apply(x, y), x / 2 * 2 + y % 2);
            }
        }
    }

    #[test]
    fn random_sandwich_is_associative_and_seeded() {
        let s = rees_matrix_semigroup(3, 2, 2, None, 7).unwrap();
        assert_eq!(s.size(), 12);
        assert!(s.binary_ops()[0].is_associative());
        assert_eq!(s, rees_matrix_semigroup(3, 2, 2, None, 7).unwrap());
    }

    #[test]
    fn degenerate_case_is_cyclic() {
        let s = rees_matrix_semigroup(4, 1, 1, Some(&[vec![1]]), 0).unwrap();
        let c4 = BinaryOp::from_fn(4, |x, y| (x + y) % 4).unwrap();
        assert_eq!(s.binary_ops()[0], c4);
    }

    #[test]
    fn bad_sandwich() {
        assert!(matches!(
            rees_matrix_semigroup(2, 1, 1, Some(&[vec![3]]), 0),
            Err(Error::BadSandwich(_))
        ));
        assert!(rees_matrix_semigroup(2, 2, 1, Some(&[vec![1]]), 0).is_err());
    }
}
