//! Direct decompositions from pairs of congruences.
//!
//! cargo run --example direct_products

use finalg::{directly_reducible, is_directly_reducible, Algebra, BinaryOp};

fn main() {
    for n in [4, 6, 8, 12] {
        let z = Algebra::magma(BinaryOp::from_fn(n, |x, y| (x + y) % n).unwrap());
        println!("Z{n} directly reducible: {}", is_directly_reducible(&z));
        for (p, q) in directly_reducible(&z) {
            println!("  {p} x {q}");
        }
    }
    let v4 = Algebra::magma(BinaryOp::from_fn(4, |x, y| x ^ y).unwrap());
    println!("V4 has {} decompositions", directly_reducible(&v4).len());
}
