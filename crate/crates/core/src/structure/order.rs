//! Meets and joins in the derived order.
//!
//! A bound is reported only when the set of common lower (upper) bounds has
//! a greatest (least) element; otherwise the result is `None`.

use crate::algebra::{FiniteEffectAlgebra, FiniteGeneralizedEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::table::ElementId;

/// Order queries shared by effect algebras and generalized effect algebras.
pub trait Poset: PartialAlgebra {
    fn below(&self, x: ElementId) -> &ElementSet;
    fn above(&self, x: ElementId) -> &ElementSet;
}

impl Poset for FiniteEffectAlgebra {
    fn below(&self, x: ElementId) -> &ElementSet {
        self.down_set(x)
    }
    fn above(&self, x: ElementId) -> &ElementSet {
        self.up_set(x)
    }
}

impl Poset for FiniteGeneralizedEffectAlgebra {
    fn below(&self, x: ElementId) -> &ElementSet {
        self.down_set(x)
    }
    fn above(&self, x: ElementId) -> &ElementSet {
        self.up_set(x)
    }
}

/// Greatest element of `set`, if any.
pub fn maximum<P: Poset>(p: &P, set: &ElementSet) -> Option<ElementId> {
    set.iter().find(|&m| set.is_subset(p.below(m)))
}

/// Least element of `set`, if any.
pub fn minimum<P: Poset>(p: &P, set: &ElementSet) -> Option<ElementId> {
    set.iter().find(|&m| set.is_subset(p.above(m)))
}

/// Greatest lower bound of `x` and `y` among the elements of `within`.
pub fn meet_within<P: Poset>(
    p: &P,
    within: &ElementSet,
    x: ElementId,
    y: ElementId,
) -> Option<ElementId> {
    let mut lower = p.below(x).intersection(p.below(y));
    lower.intersect_with(within);
    maximum(p, &lower)
}

/// Least upper bound of `x` and `y` among the elements of `within`.
pub fn join_within<P: Poset>(
    p: &P,
    within: &ElementSet,
    x: ElementId,
    y: ElementId,
) -> Option<ElementId> {
    let mut upper = p.above(x).intersection(p.above(y));
    upper.intersect_with(within);
    minimum(p, &upper)
}

pub fn poset_meet<P: Poset>(p: &P, x: ElementId, y: ElementId) -> Option<ElementId> {
    let lower = p.below(x).intersection(p.below(y));
    maximum(p, &lower)
}

pub fn poset_join<P: Poset>(p: &P, x: ElementId, y: ElementId) -> Option<ElementId> {
    let upper = p.above(x).intersection(p.above(y));
    minimum(p, &upper)
}

/// Least upper bound of an arbitrary subset, when it exists.
pub fn join_of_set<P: Poset>(p: &P, within: &ElementSet, set: &ElementSet) -> Option<ElementId> {
    let mut upper = within.clone();
    for x in set {
        upper.intersect_with(p.above(x));
    }
    minimum(p, &upper)
}

/// `Ok` if every pair has a meet and a join, else the first pair lacking one.
pub fn lattice_witness<P: Poset>(p: &P) -> Result<(), (ElementId, ElementId)> {
    for x in p.ids() {
        for y in p.ids().skip(x.index() + 1) {
            if poset_meet(p, x, y).is_none() || poset_join(p, x, y).is_none() {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

pub fn is_lattice<P: Poset>(p: &P) -> bool {
    lattice_witness(p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_chain};

    #[test]
    fn bounds_with_extremes() {
        let e = make_chain(4).unwrap();
        for x in e.ids() {
            assert_eq!(poset_meet(&e, x, e.zero()), Some(e.zero()));
            assert_eq!(poset_join(&e, x, e.one()), Some(e.one()));
        }
    }

    #[test]
    fn diamond_meets_and_joins() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        let (a, b) = (ElementId(1), ElementId(2));
        assert_eq!(poset_meet(&e, a, b), Some(e.zero()));
        assert_eq!(poset_join(&e, a, b), Some(e.one()));
        assert!(is_lattice(&e));
    }

    #[test]
    fn horizontal_sum_of_four_chains_is_a_lattice() {
        let c = make_chain(3).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        assert!(is_lattice(&e));
        assert_eq!(lattice_witness(&e), Ok(()));
    }
}
