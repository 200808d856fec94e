//! Element invariants and automorphism search.
//!
//! cargo run --example automorphisms

use finalg::{algebra_automorphisms, all_invariant_vectors, Algebra, BinaryOp, UnaryOp};

fn main() {
    // Klein four-group: every permutation fixing the identity is an automorphism
    let v4 = Algebra::magma(BinaryOp::from_fn(4, |x, y| x ^ y).unwrap());
    for (x, v) in all_invariant_vectors(&v4.binary_ops()[0]).iter().enumerate() {
        println!("invariants of {}: {v}", x + 1);
    }
    let autos = algebra_automorphisms(&v4).unwrap();
    println!("V4 has {} automorphisms", autos.len());
    for h in &autos {
        println!("  {h}");
    }

    // adding the unary map x -> x ^ 1 leaves only those commuting with it
    let flip = UnaryOp::new(vec![1, 0, 3, 2]).unwrap();
    let a = Algebra::new(4, v4.binary_ops().to_vec(), vec![flip]).unwrap();
    let autos = algebra_automorphisms(&a).unwrap();
    println!("with a unary operation: {} automorphisms", autos.len());
    for h in &autos {
        println!("  {h}");
    }
}
