//! Compatibility, internal compatibility and blocks.
//!
//! A set `M` is internally compatible when one orthogonal family drawn from
//! `M` represents every member of `M` as a sub-sum. For finite `M` it is
//! enough to find a single family covering all of `M`.
//!
//! Blocks are the maximal internally compatible sets containing 1. Any
//! family summing to 1 refines to a family of atoms without losing sub-sums,
//! so every block is the set of sub-sums of some decomposition of 1 into
//! atoms. [`blocks`] enumerates those decompositions and keeps the
//! inclusion-maximal sub-sum sets.

use std::collections::HashSet;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::table::ElementId;

/// `x comp y` iff `x = p + q`, `y = q + r` with `p + q + r` defined.
///
/// Searching over `q <= x, y` suffices: `p = x - q`, `r = y - q`, and the
/// triple sum is `x + r`.
pub fn are_compatible(e: &FiniteEffectAlgebra, x: ElementId, y: ElementId) -> bool {
    compatibility_witness(e, x, y).is_some()
}

/// `(p, q, r)` realizing `x comp y`.
pub fn compatibility_witness(
    e: &FiniteEffectAlgebra,
    x: ElementId,
    y: ElementId,
) -> Option<(ElementId, ElementId, ElementId)> {
    e.down_set(x)
        .intersection(e.down_set(y))
        .iter()
        .find_map(|q| {
            let p = e.ominus(x, q)?;
            let r = e.ominus(y, q)?;
            e.sum(x, r).map(|_| (p, q, r))
        })
}

/// Sub-sums of a family, extended by one more member.
fn extend_subsums(e: &FiniteEffectAlgebra, subsums: &ElementSet, a: ElementId) -> ElementSet {
    let mut out = subsums.clone();
    for s in subsums {
        if let Some(t) = e.sum(s, a) {
            out.insert(t);
        }
    }
    out
}

/// Searches for an orthogonal family with members from `set` whose sub-sums
/// cover `set`. Returns the family, members in nondecreasing id order.
pub fn internal_compatibility_family(
    e: &FiniteEffectAlgebra,
    set: &ElementSet,
) -> Option<Vec<ElementId>> {
    let members: Vec<ElementId> = set.iter().filter(|&m| m != e.zero()).collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !are_compatible(e, a, b) {
                return None;
            }
        }
    }
    let mut start = ElementSet::empty(e.order());
    start.insert(e.zero());
    let mut seen = HashSet::new();
    let mut family = Vec::new();
    if cover_search(
        e,
        set,
        &members,
        0,
        e.zero(),
        &start,
        &mut family,
        &mut seen,
    ) {
        Some(family)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn cover_search(
    e: &FiniteEffectAlgebra,
    target: &ElementSet,
    members: &[ElementId],
    from: usize,
    total: ElementId,
    subsums: &ElementSet,
    family: &mut Vec<ElementId>,
    seen: &mut HashSet<(usize, ElementSet)>,
) -> bool {
    if target.is_subset(subsums) {
        return true;
    }
    if !seen.insert((from, subsums.clone())) {
        return false;
    }
    for (k, &a) in members.iter().enumerate().skip(from) {
        let Some(next_total) = e.sum(total, a) else {
            continue;
        };
        let next = extend_subsums(e, subsums, a);
        family.push(a);
        if cover_search(e, target, members, k, next_total, &next, family, seen) {
            return true;
        }
        family.pop();
    }
    false
}

pub fn is_internally_compatible(e: &FiniteEffectAlgebra, set: &ElementSet) -> bool {
    internal_compatibility_family(e, set).is_some()
}

/// Minimal nonzero elements.
pub fn atoms(e: &FiniteEffectAlgebra) -> Vec<ElementId> {
    e.ids()
        .filter(|&x| x != e.zero() && e.down_set(x).len() == 2)
        .collect()
}

/// All maximal internally compatible subsets containing 1, sorted by their
/// element lists.
pub fn blocks(e: &FiniteEffectAlgebra) -> Vec<ElementSet> {
    let atoms = atoms(e);
    let mut start = ElementSet::empty(e.order());
    start.insert(e.zero());
    let mut found: HashSet<ElementSet> = HashSet::new();
    decompositions_of_one(e, &atoms, 0, e.zero(), &start, &mut found);

    let candidates: Vec<ElementSet> = found.into_iter().collect();
    let mut maximal: Vec<ElementSet> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d != *c && c.is_subset(d)))
        .cloned()
        .collect();
    maximal.sort_by_key(|b| b.to_vec());
    maximal
}

fn decompositions_of_one(
    e: &FiniteEffectAlgebra,
    atoms: &[ElementId],
    from: usize,
    total: ElementId,
    subsums: &ElementSet,
    found: &mut HashSet<ElementSet>,
) {
    if total == e.one() {
        found.insert(subsums.clone());
        return;
    }
    for (k, &a) in atoms.iter().enumerate().skip(from) {
        if let Some(next_total) = e.sum(total, a) {
            let next = extend_subsums(e, subsums, a);
            decompositions_of_one(e, atoms, k, next_total, &next, found);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_boolean, make_chain};

    #[test]
    fn supplements_and_comparables_are_compatible() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), make_chain(3).unwrap(), c]).unwrap();
        for x in e.ids() {
            assert!(are_compatible(&e, x, e.orthosupplement(x)));
            for y in e.up_set(x).iter() {
                assert!(are_compatible(&e, x, y));
            }
        }
    }

    #[test]
    fn diamond_atoms_are_incompatible() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        assert!(!are_compatible(&e, ElementId(1), ElementId(2)));
        let b = blocks(&e);
        assert_eq!(
            b.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![ElementId(0), ElementId(1), ElementId(3)],
                vec![ElementId(0), ElementId(2), ElementId(3)],
            ]
        );
    }

    #[test]
    fn boolean_algebras_have_one_block() {
        for k in 1..=3 {
            let e = make_boolean(k).unwrap();
            let b = blocks(&e);
            assert_eq!(b.len(), 1);
            assert_eq!(b[0], e.all());
            assert!(is_internally_compatible(&e, &e.all()));
        }
    }

    #[test]
    fn internal_compatibility_uses_members_only() {
        // In the 4-chain {0, p, q, 1}, the set {0, q, 1} is compatible in E
        // but q + q is undefined and p is not a member, so no family from the
        // set produces both q and 1.
        let e = make_chain(3).unwrap();
        let set = ElementSet::from_ids(4, [0, 2, 3].map(ElementId));
        assert!(!is_internally_compatible(&e, &set));
        let with_p = ElementSet::from_ids(4, [0, 1, 2, 3].map(ElementId));
        assert_eq!(
            internal_compatibility_family(&e, &with_p),
            Some(vec![ElementId(1), ElementId(1), ElementId(1)])
        );
    }
}
