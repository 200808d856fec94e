//! Endomorphisms by direct search and through congruences.
//!
//! The congruence route lists, for each congruence, the embeddings of the
//! quotient back into the algebra.
//!
//! cargo run --example endomorphisms

use finalg::{
    all_monomorphisms, classic_endomorphisms, congruence_endomorphisms, quotient_algebra,
    Algebra, Partition,
};

fn main() {
    let mut rows = vec![vec![1; 6]; 5];
    rows.push(vec![1, 1, 1, 2, 3, 1]);
    let a = Algebra::magma_from_rows(&rows).unwrap();

    let c = Partition::from_encoding(&[-3, 1, 1, -1, -2, 5]).unwrap();
    let q = quotient_algebra(&a, &c).unwrap();
    let embeddings = all_monomorphisms(&q.quotient, &a).unwrap();
    println!("quotient by {c} has {} elements and {} embeddings", q.quotient.size(), embeddings.len());
    for g in embeddings.iter().take(4) {
        println!("  {g} gives endomorphism {}", q.map_to_quotient.then(g));
    }

    let classic = classic_endomorphisms(&a);
    let via_congruences = congruence_endomorphisms(&a);
    println!("{} endomorphisms; both methods agree: {}", classic.len(), classic == via_congruences);
}
