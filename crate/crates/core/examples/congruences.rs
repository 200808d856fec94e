//! Principal congruences, the congruence set and the monolith test on the
//! two six-element semigroups shipped as fixtures.
//!
//! cargo run --example congruences

use finalg::format::parse_algebra;
use finalg::{all_congruences, all_principal_congruences, is_monolithic, principal_congruence};

fn load(name: &str) -> finalg::Algebra {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_algebra(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn main() {
    for name in ["constant6.json", "algebra_6_19.json"] {
        let a = load(name);
        let principal = all_principal_congruences(&a);
        println!("{name}: {} principal congruences", principal.len());
        for p in &principal {
            println!("  {p}");
        }
        println!("  {} congruences in total", all_congruences(&a).len());
        println!("  monolithic: {}", is_monolithic(&a).unwrap());
    }

    let a = load("algebra_6_19.json");
    println!("Cg(3, 4) = {}", principal_congruence(&a, 2, 3).unwrap());
}
