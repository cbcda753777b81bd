use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use efalg_core::catalog::{enumerate_all, make_chain, named_catalog, random_algebra_with_bound};
use efalg_core::iso::{canonical_form, find_isomorphism};
use efalg_core::{ElementId, FiniteEffectAlgebra, PartialAlgebra};

fn permuted(e: &FiniteEffectAlgebra, rng: &mut ChaCha8Rng) -> FiniteEffectAlgebra {
    let mut perm: Vec<ElementId> = (0..e.order()).map(ElementId::new).collect();
    perm.shuffle(rng);
    e.relabel(&perm)
}

#[test]
fn permuted_copies_are_recognized() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let e = random_algebra_with_bound(rng.gen(), rng.gen_range(2..=8), 8).unwrap();
        let copy = permuted(&e, &mut rng);
        let w = find_isomorphism(&e, &copy).expect("permuted copy is isomorphic");
        assert!(w.verify(&e, &copy));
        assert!(w.inverse().verify(&copy, &e));
        assert_eq!(canonical_form(&e), canonical_form(&copy));
    }
}

#[test]
fn four_chain_presentations() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let e = make_chain(3).unwrap();
    for _ in 0..20 {
        let copy = permuted(&e, &mut rng);
        assert!(find_isomorphism(&e, &copy).unwrap().verify(&e, &copy));
    }
}

#[test]
fn isomorphism_iff_equal_canonical_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pool = enumerate_all(6).unwrap();
    let copies: Vec<FiniteEffectAlgebra> = pool.iter().map(|e| permuted(e, &mut rng)).collect();
    pool.extend(copies);
    let forms: Vec<Vec<u8>> = pool.iter().map(canonical_form).collect();
    for (i, a) in pool.iter().enumerate() {
        for (j, b) in pool.iter().enumerate() {
            let iso = find_isomorphism(a, b);
            if let Some(w) = &iso {
                assert!(w.verify(a, b));
            }
            assert_eq!(iso.is_some(), forms[i] == forms[j], "pair {i}, {j}");
        }
    }
}

#[test]
fn catalog_forms_appear_in_enumeration() {
    let enumerated: Vec<Vec<u8>> = enumerate_all(6)
        .unwrap()
        .iter()
        .map(canonical_form)
        .collect();
    for entry in named_catalog()
        .into_iter()
        .filter(|c| c.algebra.order() <= 6)
    {
        assert!(
            enumerated.contains(&canonical_form(&entry.algebra)),
            "{}",
            entry.name
        );
    }
}
