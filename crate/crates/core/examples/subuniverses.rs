//! Subuniverses, closures and extraction of subalgebras.
//!
//! cargo run --example subuniverses

use finalg::{all_subuniverses, closure, generated, subalgebra_from_universe, Algebra, BinaryOp};

fn main() {
    let z12 = Algebra::magma(BinaryOp::from_fn(12, |x, y| (x + y) % 12).unwrap());
    for s in all_subuniverses(&z12) {
        let shown: Vec<usize> = s.iter().map(|x| x + 1).collect();
        println!("{shown:?}");
    }

    // zero-based: <4> = {0, 4, 8}, and adding 6 closes up to the even residues
    let base = generated(&z12, &[4]);
    println!("<4> = {base:?}, closure with 6 = {:?}", closure(&z12, &base, 6).unwrap());

    let (sub, elems) = subalgebra_from_universe(&z12, &[0, 3, 6, 9]).unwrap();
    println!("subalgebra on {elems:?} has table {:?}", sub.to_tables().binary[0]);
}
