//! Distinguished element classes: sharp, meager, hypermeager, principal and
//! central elements.

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::structure::order::{meet_within, poset_join, poset_meet};
use crate::table::ElementId;

/// `x` is sharp iff `x ∧ x' = 0`.
pub fn is_sharp(e: &FiniteEffectAlgebra, x: ElementId) -> bool {
    poset_meet(e, x, e.orthosupplement(x)) == Some(e.zero())
}

pub fn sharp_elements(e: &FiniteEffectAlgebra) -> ElementSet {
    ElementSet::from_ids(e.order(), e.ids().filter(|&x| is_sharp(e, x)))
}

/// Elements with no nonzero sharp element below them.
pub fn meager_elements_with(e: &FiniteEffectAlgebra, sharp: &ElementSet) -> ElementSet {
    ElementSet::from_ids(
        e.order(),
        e.ids().filter(|&x| {
            e.down_set(x)
                .intersection(sharp)
                .iter()
                .all(|v| v == e.zero())
        }),
    )
}

pub fn meager_elements(e: &FiniteEffectAlgebra) -> ElementSet {
    meager_elements_with(e, &sharp_elements(e))
}

/// Elements `x` for which some `y` has `x <= y` and `x <= y'`.
pub fn hypermeager_elements(e: &FiniteEffectAlgebra) -> ElementSet {
    ElementSet::from_ids(
        e.order(),
        e.ids()
            .filter(|&x| e.up_set(x).iter().any(|y| e.leq(x, e.orthosupplement(y)))),
    )
}

/// `y + z <= x` whenever `y, z <= x` and `y + z` exists.
pub fn is_principal(e: &FiniteEffectAlgebra, x: ElementId) -> bool {
    let below = e.down_set(x);
    below.iter().all(|y| {
        below
            .iter()
            .all(|z| e.sum(y, z).is_none_or(|s| e.leq(s, x)))
    })
}

pub fn principal_elements(e: &FiniteEffectAlgebra) -> ElementSet {
    ElementSet::from_ids(e.order(), e.ids().filter(|&x| is_principal(e, x)))
}

/// `x` and `x'` are principal and every `y` splits as `y1 + y2` with
/// `y1 <= x`, `y2 <= x'`.
pub fn is_central(e: &FiniteEffectAlgebra, x: ElementId) -> bool {
    let xc = e.orthosupplement(x);
    if !is_principal(e, x) || !is_principal(e, xc) {
        return false;
    }
    e.ids().all(|y| {
        e.down_set(x)
            .iter()
            .any(|y1| e.ominus(y, y1).is_some_and(|y2| e.leq(y2, xc)))
    })
}

pub fn central_elements(e: &FiniteEffectAlgebra) -> ElementSet {
    ElementSet::from_ids(e.order(), e.ids().filter(|&x| is_central(e, x)))
}

/// `x + x` defined only for `x = 0`.
pub fn orthoalgebra_witness(e: &FiniteEffectAlgebra) -> Option<ElementId> {
    e.ids().find(|&x| x != e.zero() && e.sum(x, x).is_some())
}

/// Whether `set` is a sub-effect algebra that is a Boolean algebra in the
/// induced order: closed under meets and joins taken in `e`, every element
/// complemented by its orthosupplement, meets distributing over joins, and
/// orthogonal sums agreeing with joins.
pub fn is_boolean_subalgebra(e: &FiniteEffectAlgebra, set: &ElementSet) -> bool {
    if !e.is_sub_effect_algebra(set) {
        return false;
    }
    let meet = |a, b| poset_meet(e, a, b).filter(|m| set.contains(*m));
    let join = |a, b| poset_join(e, a, b).filter(|m| set.contains(*m));
    for a in set {
        if meet(a, e.orthosupplement(a)) != Some(e.zero()) {
            return false;
        }
        for b in set {
            let (Some(_), Some(ab)) = (meet(a, b), join(a, b)) else {
                return false;
            };
            if let Some(s) = e.sum(a, b) {
                if s != ab || meet(a, b) != Some(e.zero()) {
                    return false;
                }
            }
            for c in set {
                let left = join(b, c).and_then(|bc| meet(a, bc));
                let right = match (meet(a, b), meet(a, c)) {
                    (Some(x), Some(y)) => join(x, y),
                    _ => None,
                };
                if left.is_none() || left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Meet of two meager elements inside `Mea(E)`.
pub fn meager_meet(
    e: &FiniteEffectAlgebra,
    meager: &ElementSet,
    x: ElementId,
    y: ElementId,
) -> Option<ElementId> {
    meet_within(e, meager, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_boolean, make_chain};

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().map(|&i| ElementId(i)).collect()
    }

    #[test]
    fn boolean_square_is_all_sharp_and_central() {
        let e = make_boolean(2).unwrap();
        assert_eq!(sharp_elements(&e).len(), 4);
        assert_eq!(central_elements(&e).len(), 4);
        assert_eq!(meager_elements(&e).to_vec(), vec![e.zero()]);
        assert_eq!(hypermeager_elements(&e).to_vec(), vec![e.zero()]);
        assert!(is_boolean_subalgebra(&e, &e.all()));
    }

    #[test]
    fn three_chain_classes() {
        let e = make_chain(2).unwrap();
        assert_eq!(sharp_elements(&e).to_vec(), ids(&[0, 2]));
        assert_eq!(meager_elements(&e).to_vec(), ids(&[0, 1]));
    }

    #[test]
    fn four_chain_classes() {
        let e = make_chain(3).unwrap();
        assert_eq!(meager_elements(&e).to_vec(), ids(&[0, 1, 2]));
        assert_eq!(hypermeager_elements(&e).to_vec(), ids(&[0, 1]));
    }

    #[test]
    fn diamond_principal_and_center() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        assert_eq!(principal_elements(&e).to_vec(), ids(&[0, 3]));
        assert_eq!(central_elements(&e).to_vec(), ids(&[0, 3]));
        assert!(orthoalgebra_witness(&e).is_some());
    }

    #[test]
    fn boolean_cube_orthoalgebra() {
        let e = make_boolean(3).unwrap();
        assert_eq!(orthoalgebra_witness(&e), None);
        assert_eq!(principal_elements(&e).len(), 8);
    }
}
