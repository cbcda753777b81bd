//! Riesz decomposition property and homogeneity.

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::table::ElementId;

/// Whether `u = u1 + u2` for some `u1 <= v1`, `u2 <= v2`.
pub fn splits(e: &FiniteEffectAlgebra, u: ElementId, v1: ElementId, v2: ElementId) -> bool {
    e.down_set(u)
        .intersection(e.down_set(v1))
        .iter()
        .any(|u1| e.ominus(u, u1).is_some_and(|u2| e.leq(u2, v2)))
}

fn first_unsplit(
    e: &FiniteEffectAlgebra,
    only_homogeneous_triples: bool,
) -> Option<(ElementId, ElementId, ElementId)> {
    for u in e.ids() {
        let uc = e.orthosupplement(u);
        for v1 in e.ids() {
            for v2 in e.ids() {
                let Some(s) = e.sum(v1, v2) else { continue };
                if !e.leq(u, s) || (only_homogeneous_triples && !e.leq(s, uc)) {
                    continue;
                }
                if !splits(e, u, v1, v2) {
                    return Some((u, v1, v2));
                }
            }
        }
    }
    None
}

/// `Ok` if RDP holds, else the least `(u, v1, v2)` with `u <= v1 + v2`
/// that does not split.
pub fn rdp_witness(e: &FiniteEffectAlgebra) -> Result<(), (ElementId, ElementId, ElementId)> {
    first_unsplit(e, false).map_or(Ok(()), Err)
}

pub fn has_rdp(e: &FiniteEffectAlgebra) -> bool {
    rdp_witness(e).is_ok()
}

/// Like [`rdp_witness`] but only over triples with `u <= v1 + v2 <= u'`.
pub fn homogeneity_witness(
    e: &FiniteEffectAlgebra,
) -> Result<(), (ElementId, ElementId, ElementId)> {
    first_unsplit(e, true).map_or(Ok(()), Err)
}

pub fn is_homogeneous(e: &FiniteEffectAlgebra) -> bool {
    homogeneity_witness(e).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{direct_product, horizontal_sum, make_boolean, make_chain};

    #[test]
    fn chains_and_products_have_rdp() {
        assert!(has_rdp(&make_chain(2).unwrap()));
        assert!(has_rdp(&make_chain(5).unwrap()));
        let p = direct_product(&make_chain(2).unwrap(), &make_chain(3).unwrap()).unwrap();
        assert!(has_rdp(&p));
        assert!(has_rdp(&make_boolean(3).unwrap()));
    }

    #[test]
    fn diamond_is_homogeneous_without_rdp() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        assert!(is_homogeneous(&e));
        let (u, v1, v2) = rdp_witness(&e).unwrap_err();
        let s = e.sum(v1, v2).unwrap();
        assert!(e.leq(u, s));
        assert!(!splits(&e, u, v1, v2));
    }
}
