//! The closure operators `vartheta`, `Theta` and `sigma`.
//!
//! `vartheta(u)` collects every `v` that is the sum (taken in `Mea(E)`) of
//! an orthogonal family whose members all lie below `u'`, with `v <= u`,
//! together with the matching differences `u - v`. In a finite algebra the
//! family can be taken finite and free of zeros, so the candidate sums are
//! exactly the elements reachable from 0 by repeatedly adding some nonzero
//! `a <= u'` while staying meager and below `u`.

use std::collections::VecDeque;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::structure::elements::meager_elements;
use crate::table::ElementId;

/// Sums of finite orthogonal families from `[0, u']`, computed in
/// `Mea(E)`, that stay below `u`.
pub fn family_sums_below(e: &FiniteEffectAlgebra, meager: &ElementSet, u: ElementId) -> ElementSet {
    let uc = e.orthosupplement(u);
    let steps: Vec<ElementId> = e
        .down_set(uc)
        .iter()
        .filter(|&a| a != e.zero() && meager.contains(a))
        .collect();
    let mut reached = ElementSet::empty(e.order());
    reached.insert(e.zero());
    let mut queue = VecDeque::from([e.zero()]);
    while let Some(v) = queue.pop_front() {
        for &a in &steps {
            let Some(w) = e.sum(v, a) else { continue };
            if meager.contains(w) && e.leq(w, u) && !reached.contains(w) {
                reached.insert(w);
                queue.push_back(w);
            }
        }
    }
    reached
}

pub fn vartheta_with(e: &FiniteEffectAlgebra, meager: &ElementSet, u: ElementId) -> ElementSet {
    let sums = family_sums_below(e, meager, u);
    let mut out = sums.clone();
    for v in &sums {
        out.insert(e.ominus(u, v).expect("family sums lie below u"));
    }
    out
}

pub fn vartheta(e: &FiniteEffectAlgebra, u: ElementId) -> ElementSet {
    vartheta_with(e, &meager_elements(e), u)
}

/// Union of `vartheta(u)` over `u` in `set`.
pub fn big_theta(e: &FiniteEffectAlgebra, set: &ElementSet) -> ElementSet {
    let meager = meager_elements(e);
    big_theta_with(e, &meager, set)
}

fn big_theta_with(e: &FiniteEffectAlgebra, meager: &ElementSet, set: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(e.order());
    for u in set {
        out.union_with(&vartheta_with(e, meager, u));
    }
    out
}

/// Smallest superset of `set` closed under `Theta`, with the number of
/// rounds needed to reach it.
pub fn sigma_closure_rounds(e: &FiniteEffectAlgebra, set: &ElementSet) -> (ElementSet, usize) {
    let meager = meager_elements(e);
    let mut current = set.clone();
    let mut rounds = 0;
    loop {
        let mut next = big_theta_with(e, &meager, &current);
        next.union_with(&current);
        if next == current {
            return (current, rounds);
        }
        current = next;
        rounds += 1;
    }
}

pub fn sigma_closure(e: &FiniteEffectAlgebra, set: &ElementSet) -> ElementSet {
    sigma_closure_rounds(e, set).0
}

/// Family sums from which no further element of `[0, u']` can be added
/// without leaving `[0, u]` or `Mea(E)`.
pub fn maximal_family_sums(
    e: &FiniteEffectAlgebra,
    meager: &ElementSet,
    u: ElementId,
) -> Vec<ElementId> {
    let uc = e.orthosupplement(u);
    let sums = family_sums_below(e, meager, u);
    sums.iter()
        .filter(|&v| {
            !e.down_set(uc).iter().any(|a| {
                a != e.zero()
                    && e.sum(v, a)
                        .is_some_and(|w| e.leq(w, u) && meager.contains(w))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_chain};
    use crate::structure::elements::sharp_elements;

    #[test]
    fn sharp_elements_give_trivial_vartheta() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), make_chain(4).unwrap()]).unwrap();
        for s in sharp_elements(&e).iter() {
            let mut expected = ElementSet::empty(e.order());
            expected.insert(e.zero());
            expected.insert(s);
            assert_eq!(vartheta(&e, s), expected);
        }
        assert_eq!(vartheta(&e, e.zero()).to_vec(), vec![e.zero()]);
    }

    #[test]
    fn chain_vartheta() {
        // 5-chain 0 < 1 < 2 < 3 < 4: for u = 1, u' = 3 and sums of copies of
        // 1 stay below u only up to 1 itself.
        let e = make_chain(4).unwrap();
        assert_eq!(
            vartheta(&e, ElementId(1)).to_vec(),
            vec![ElementId(0), ElementId(1)]
        );
        // u = 3: u' = 1, so families are copies of 1 with sums 0..=3, all
        // meager; differences fill in the rest.
        assert_eq!(vartheta(&e, ElementId(3)).len(), 4);
        assert_eq!(
            maximal_family_sums(&e, &meager_elements(&e), ElementId(3)),
            vec![ElementId(3)]
        );
    }

    #[test]
    fn sigma_is_idempotent() {
        let e = make_chain(5).unwrap();
        let start = ElementSet::from_ids(6, [ElementId(4)]);
        let (closed, _) = sigma_closure_rounds(&e, &start);
        assert_eq!(sigma_closure(&e, &closed), closed);
        assert!(start.is_subset(&closed));
    }
}
