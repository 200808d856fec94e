//! Divisibility: quotients of subalgebras isomorphic to a given algebra.
//!
//! cargo run --example divisors

use finalg::{all_divisor_witnesses, exists_divisor, Algebra, BinaryOp};

fn main() {
    let z6 = Algebra::magma(BinaryOp::from_fn(6, |x, y| (x + y) % 6).unwrap());
    let z2 = Algebra::magma(BinaryOp::from_fn(2, |x, y| (x + y) % 2).unwrap());
    let z4 = Algebra::magma(BinaryOp::from_fn(4, |x, y| (x + y) % 4).unwrap());
    for w in all_divisor_witnesses(&z6, &z2).unwrap() {
        let s: Vec<usize> = w.subuniverse.iter().map(|x| x + 1).collect();
        println!("Z2 divides Z6 through {s:?} modulo {}", w.congruence);
    }
    println!("Z4 divides Z6: {}", exists_divisor(&z6, &z4).unwrap());
}
