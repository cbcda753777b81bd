mod support;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use efalg_core::catalog::{enumerate_order, random_algebra};
use efalg_core::iso::canonical_certificate;
use efalg_core::{
    verify_effect_algebra, ElementId, FiniteEffectAlgebra, PartialAlgebra, PartialOpTable,
};

use support::{naive_generate_and_filter, naive_is_effect_algebra, rows_of, Rows};

#[allow(clippy::needless_range_loop)]
fn random_rows(rng: &mut ChaCha8Rng, n: usize) -> Rows {
    let symmetric = rng.gen_bool(0.7);
    let mut rows = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if symmetric && j < i {
                rows[i][j] = rows[j][i];
            } else if rng.gen_bool(0.5) {
                rows[i][j] = Some(rng.gen_range(0..n));
            }
        }
    }
    rows
}

/// A table of order 2..=5 and its bounds: a fully random one, a valid
/// algebra, or a valid algebra with one cell changed.
fn sample(rng: &mut ChaCha8Rng) -> (Rows, usize, usize) {
    let n = rng.gen_range(2..=5);
    match rng.gen_range(0..3) {
        0 => {
            let rows = random_rows(rng, n);
            (rows, rng.gen_range(0..n), rng.gen_range(0..n))
        }
        kind => {
            let e = random_algebra(rng.gen(), n).unwrap();
            let mut rows = rows_of(&e);
            if kind == 2 {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let v = if rng.gen_bool(0.3) {
                    None
                } else {
                    Some(rng.gen_range(0..n))
                };
                rows[i][j] = v;
                if rng.gen_bool(0.5) {
                    rows[j][i] = v;
                }
            }
            (rows, e.zero().index(), e.one().index())
        }
    }
}

#[test]
fn verifier_agrees_with_all_triples_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut valid, mut invalid) = (0, 0);
    for _ in 0..10_000 {
        let (rows, zero, one) = sample(&mut rng);
        let table = PartialOpTable::from_rows(&rows).unwrap();
        let verdict =
            verify_effect_algebra(&table, ElementId::new(zero), ElementId::new(one)).unwrap();
        let expected = naive_is_effect_algebra(&rows, zero, one);
        assert_eq!(
            verdict.violations.is_empty(),
            expected,
            "{rows:?} zero {zero} one {one}: {verdict:?}"
        );
        if expected {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    assert!(
        valid > 1000 && invalid > 1000,
        "valid {valid}, invalid {invalid}"
    );
}

fn certificates(algebras: impl IntoIterator<Item = FiniteEffectAlgebra>) -> Vec<Vec<u32>> {
    let mut certs: Vec<Vec<u32>> = algebras
        .into_iter()
        .map(|e| canonical_certificate(&e))
        .collect();
    certs.sort();
    certs
}

#[test]
fn enumeration_agrees_with_generate_and_filter() {
    for n in 2..=4 {
        let naive: BTreeSet<Vec<u32>> = naive_generate_and_filter(n)
            .into_iter()
            .map(|rows| {
                let t = PartialOpTable::from_rows(&rows).unwrap();
                canonical_certificate(
                    &FiniteEffectAlgebra::new(t, ElementId(0), ElementId::new(n - 1)).unwrap(),
                )
            })
            .collect();
        let enumerated = certificates(enumerate_order(n).0);
        assert_eq!(
            naive.into_iter().collect::<Vec<_>>(),
            enumerated,
            "order {n}"
        );
    }
}

#[test]
fn enumeration_counts_match_golden() {
    let golden = include_str!("golden/enumeration_counts.txt");
    for line in golden.lines().filter(|l| !l.starts_with('#')) {
        let [_, n, count] = line.split_whitespace().collect::<Vec<_>>()[..] else {
            panic!("bad golden line {line:?}");
        };
        let n: usize = n.parse().unwrap();
        assert_eq!(
            enumerate_order(n).0.len(),
            count.parse::<usize>().unwrap(),
            "order {n}"
        );
    }
}

#[test]
fn random_draws_cover_every_order_four_class() {
    let expected: BTreeSet<Vec<u32>> = certificates(enumerate_order(4).0).into_iter().collect();
    let seen: BTreeSet<Vec<u32>> = (0..10_000)
        .map(|seed| canonical_certificate(&random_algebra(seed, 4).unwrap()))
        .collect();
    assert_eq!(seen, expected);
}

#[test]
fn random_algebras_pass_the_oracle() {
    for seed in 0..500 {
        let e = random_algebra(seed, 2 + (seed as usize % 7)).unwrap();
        assert!(naive_is_effect_algebra(
            &rows_of(&e),
            e.zero().index(),
            e.one().index()
        ));
    }
}
