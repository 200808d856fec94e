//! Monomorphisms, epimorphisms and isomorphisms between cyclic groups.
//!
//! cargo run --example morphisms

use finalg::{all_epimorphisms, all_monomorphisms, are_isomorphic, Algebra, BinaryOp, Mapping};

fn cyclic(n: usize) -> Algebra {
    Algebra::magma(BinaryOp::from_fn(n, |x, y| (x + y) % n).unwrap())
}

fn show(maps: &[Mapping]) -> String {
    let parts: Vec<String> = maps.iter().map(Mapping::to_string).collect();
    parts.join(" ")
}

fn main() {
    let (c2, c3, c6) = (cyclic(2), cyclic(3), cyclic(6));
    println!("C2 -> C6 embeddings: {}", show(&all_monomorphisms(&c2, &c6).unwrap()));
    println!("C3 -> C6 embeddings: {}", show(&all_monomorphisms(&c3, &c6).unwrap()));
    println!("C6 -> C3 epimorphisms: {}", show(&all_epimorphisms(&c6, &c3).unwrap()));

    let shuffled = c6.relabel(&Mapping::new(vec![3, 5, 0, 1, 4, 2])).unwrap();
    match are_isomorphic(&c6, &shuffled).unwrap() {
        Some(h) => println!("C6 is isomorphic to its relabeling via {h}"),
        None => println!("no isomorphism found"),
    }
    println!("C6 and C2 isomorphic: {}", are_isomorphic(&c6, &c2).unwrap().is_some());
}
