//! Union-find partitions: encodings, joins, meets and the set order.
//!
//! cargo run --example partitions

use finalg::partition::bell_number;
use finalg::Partition;

fn main() {
    let p = Partition::from_encoding(&[-2, -1, -2, -1, 3, 1]).unwrap();
    println!("{p} has blocks {:?}", p.blocks_one_based());

    // an unnormalized forest: 3 is the root of {1, 3, 5}
    let mut q = Partition::from_encoding(&[3, -1, -3, -1, 3, -1]).unwrap();
    println!("before normalize {q}");
    q.normalize();
    println!("after normalize  {q}");

    let j = p.join(&q).unwrap();
    let m = p.meet(&q).unwrap();
    println!("join {j}  meet {m}");
    println!("meet below join: {}", m.is_contained_in(&j));

    let mut all: Vec<Partition> = finalg::oracle::set_partitions(4)
        .iter()
        .map(|l| Partition::from_labels(l))
        .collect();
    all.sort();
    println!("{} partitions of a 4-set (Bell number {}), in set order:", all.len(), bell_number(4));
    for p in &all {
        println!("  {p}");
    }
}
