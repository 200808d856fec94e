mod common;

use finalg::oracle::{self, MapKind};
use finalg::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn algebra_strategy(max: usize) -> impl Strategy<Value = Algebra> {
    (2..=max, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (nb, nu) = random_signature(&mut rng);
        random_algebra(&mut rng, n, nb, nu)
    })
}

fn magma_strategy(max: usize) -> impl Strategy<Value = Algebra> {
    (2..=max, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_algebra(&mut rng, n, 1, 0)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn congruences_match_oracle(a in algebra_strategy(6)) {
        prop_assert_eq!(all_congruences(&a), oracle::oracle_congruences(&a).unwrap());
    }

    #[test]
    fn principal_congruence_is_least(a in algebra_strategy(6), x in 0usize..6, y in 0usize..6) {
        let (x, y) = (x % a.size(), y % a.size());
        let p = principal_congruence(&a, x, y).unwrap();
        prop_assert!(is_congruence(&a, &p));
        prop_assert_eq!(p.find(x), p.find(y));
        for c in oracle::oracle_congruences(&a).unwrap() {
            if c.find(x) == c.find(y) {
                prop_assert!(p.is_contained_in(&c));
            }
        }
    }

    #[test]
    fn automorphisms_preserve_invariants(a in magma_strategy(7)) {
        let op = &a.binary_ops()[0];
        let v = all_invariant_vectors(op);
        for h in magma_automorphisms(op) {
            for x in 0..a.size() {
                prop_assert_eq!(v[x], v[h.apply(x)]);
            }
        }
    }

    #[test]
    fn automorphisms_form_a_group(a in algebra_strategy(6)) {
        let autos = algebra_automorphisms(&a).unwrap();
        prop_assert!(autos.contains(&Mapping::identity(a.size())));
        for g in &autos {
            prop_assert!(autos.contains(&g.inverse().unwrap()));
            for h in &autos {
                prop_assert!(autos.contains(&g.then(h)));
            }
        }
    }

    #[test]
    fn quotient_map_is_a_homomorphism(a in algebra_strategy(6), pick in any::<prop::sample::Index>()) {
        let cs = all_congruences(&a);
        let c = &cs[pick.index(cs.len())];
        let q = quotient_algebra(&a, c).unwrap();
        prop_assert!(validate_algebra(&q.quotient.to_tables()).is_ok());
        prop_assert_eq!(q.quotient.size(), c.number_of_blocks());
        prop_assert!(is_homomorphism(&q.map_to_quotient, &a, &q.quotient).unwrap());
    }

    #[test]
    fn unary_expansion_is_duplicate_free(a in algebra_strategy(6)) {
        let funcs = binary_to_unary(&a);
        for (i, f) in funcs.iter().enumerate() {
            prop_assert!(!funcs[i + 1..].contains(f));
        }
        for u in a.unary_ops() {
            prop_assert!(funcs.contains(u));
        }
    }

    #[test]
    fn relabeling_preserves_isomorphism_type(a in algebra_strategy(6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..a.size()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let b = a.relabel(&Mapping::new(perm)).unwrap();
        let iso = are_isomorphic(&a, &b).unwrap().expect("relabeled copy is isomorphic");
        prop_assert!(is_homomorphism(&iso, &a, &b).unwrap());
        prop_assert_eq!(
            algebra_automorphisms(&a).unwrap().len(),
            algebra_automorphisms(&b).unwrap().len()
        );
        prop_assert_eq!(all_congruences(&a).len(), all_congruences(&b).len());
    }

    #[test]
    fn endomorphism_methods_agree(a in algebra_strategy(5)) {
        let classic = classic_endomorphisms(&a);
        prop_assert_eq!(&classic, &congruence_endomorphisms(&a));
        prop_assert_eq!(&classic, &endomorphisms_with_threshold(&a, 0));
        prop_assert_eq!(&classic, &oracle::oracle_maps(&a, &a, MapKind::Endo).unwrap());
    }

    #[test]
    fn one_and_exists_agree_with_all(a in algebra_strategy(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quotient(&mut rng, &a);
        let monos = all_monomorphisms(&q, &a).unwrap();
        prop_assert_eq!(exists_monomorphism(&q, &a).unwrap(), !monos.is_empty());
        if let Some(m) = one_monomorphism(&q, &a).unwrap() {
            prop_assert!(monos.contains(&m));
        }
        let epis = all_epimorphisms(&a, &q).unwrap();
        prop_assert!(!epis.is_empty());
        prop_assert!(epis.contains(&one_epimorphism(&a, &q).unwrap().unwrap()));
        prop_assert!(exists_epimorphism(&a, &q).unwrap());
    }

    #[test]
    fn generated_sets_are_least_subuniverses(a in algebra_strategy(6), gens in prop::collection::vec(0usize..6, 1..4)) {
        let gens: Vec<usize> = gens.into_iter().map(|g| g % a.size()).collect();
        let s = generated(&a, &gens);
        let subs = all_subuniverses(&a);
        prop_assert!(subs.contains(&s));
        for t in subs.iter().filter(|t| gens.iter().all(|g| t.contains(g))) {
            prop_assert!(s.iter().all(|x| t.contains(x)));
        }
    }

    #[test]
    fn divisors_match_brute_force(a in algebra_strategy(4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (nb, nu) = (a.binary_ops().len(), a.unary_ops().len());
        let b = random_algebra(&mut rng, 2, nb, nu);
        let mut expected = Vec::new();
        for s in oracle::oracle_subuniverses(&a).unwrap() {
            let (sub, _) = subalgebra_from_universe(&a, &s).unwrap();
            for c in oracle::oracle_congruences(&sub).unwrap() {
                let q = quotient_algebra(&sub, &c).unwrap().quotient;
                if q.size() == b.size() && !oracle::oracle_maps(&q, &b, MapKind::Iso).unwrap().is_empty() {
                    expected.push(DivisorWitness { subuniverse: s.clone(), congruence: c });
                }
            }
        }
        expected.sort();
        let mut got = all_divisor_witnesses(&a, &b).unwrap();
        got.sort();
        prop_assert_eq!(exists_divisor(&a, &b).unwrap(), !got.is_empty());
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn rees_semigroups_are_associative(g in 1usize..4, rows in 1usize..4, cols in 1usize..4, seed in any::<u64>()) {
        let s = rees_matrix_semigroup(g, rows, cols, None, seed).unwrap();
        prop_assert_eq!(s.size(), g * rows * cols);
        prop_assert!(s.binary_ops()[0].is_associative());
    }

    #[test]
    fn join_and_meet_are_bounds(
        n in 1usize..12,
        a in prop::collection::vec(0usize..12, 12),
        b in prop::collection::vec(0usize..12, 12),
    ) {
        let p = Partition::from_labels(&a[..n]);
        let q = Partition::from_labels(&b[..n]);
        let j = p.join(&q).unwrap();
        let m = p.meet(&q).unwrap();
        prop_assert!(p.is_contained_in(&j) && q.is_contained_in(&j));
        prop_assert!(m.is_contained_in(&p) && m.is_contained_in(&q));
        prop_assert!(j.is_normalized() && m.is_normalized());
        prop_assert_eq!(Partition::from_encoding(&j.encoding()).unwrap(), j);
    }
}

#[test]
fn direct_products_decompose() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let (nb, nu) = random_signature(&mut rng);
        let x = random_algebra(&mut rng, 2, nb, nu);
        let y = random_algebra(&mut rng, 3, nb, nu);
        let p = product(&x, &y);
        // the projection kernels always qualify
        let left = Partition::from_labels(&(0..6).map(|u| u / 3).collect::<Vec<_>>());
        let right = Partition::from_labels(&(0..6).map(|u| u % 3).collect::<Vec<_>>());
        let pairs = directly_reducible(&p);
        assert!(pairs
            .iter()
            .any(|(a, b)| (a == &left && b == &right) || (a == &right && b == &left)));
        assert_eq!(pairs, oracle::oracle_directly_reducible(&p).unwrap());
    }
}

#[test]
fn fixed_examples_survive_relabeling() {
    for a in [algebra_6_19(), six_element(), constant_one(5), cyclic(6)] {
        let perm = Mapping::new((0..a.size()).rev().collect());
        let b = a.relabel(&perm).unwrap();
        assert_eq!(is_monolithic(&a).unwrap(), is_monolithic(&b).unwrap());
        assert_eq!(all_subuniverses(&a).len(), all_subuniverses(&b).len());
        assert_eq!(endomorphisms(&a).len(), endomorphisms(&b).len());
    }
}
