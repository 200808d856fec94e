//! Semigroups of order at most three up to isomorphism and anti-isomorphism,
//! with their monolithic count and automorphism group orders.
//!
//! cargo run --example small_semigroups

use finalg::cli::semigroup_statistics;
use finalg::format::{emit_algebra, Format};
use finalg::oracle::enumerate_semigroups;

fn main() {
    for size in 1..=3 {
        let s = semigroup_statistics(size).unwrap();
        println!(
            "order {size}: {} classes, {} monolithic, automorphism orders {:?}",
            s.classes, s.monolithic, s.automorphism_counts
        );
    }
    println!("order 2 representatives:");
    for s in enumerate_semigroups(2).unwrap() {
        println!("  {}", emit_algebra(&s, Format::Gap).unwrap());
    }
}
