//! Structural analysis of a finite effect algebra.

pub mod bounds;
pub mod closure;
pub mod compat;
pub mod elements;
pub mod heyting;
pub mod order;
pub mod riesz;

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::table::ElementId;

pub use bounds::{decompose, is_sharply_dominating, sharp_bounds, SharpBounds};
pub use closure::{big_theta, sigma_closure, vartheta};
pub use compat::{are_compatible, blocks, is_internally_compatible};
pub use elements::{
    central_elements, hypermeager_elements, meager_elements, principal_elements, sharp_elements,
};
pub use heyting::{heyting_block_check, HeytingFailure};
pub use order::{is_lattice, poset_join, poset_meet, Poset};
pub use riesz::{has_rdp, is_homogeneous};

/// A boolean classifier with the witness that refutes it, when false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ElementId>>,
}

impl Flag {
    fn from_witness(witness: Option<Vec<ElementId>>) -> Self {
        Flag {
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub homogeneous: Flag,
    pub rdp: Flag,
    pub lattice: Flag,
    pub sharply_dominating: Flag,
    pub archimedean: Flag,
    pub orthoalgebra: Flag,
}

/// Every computed set and classifier for one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub sharp: ElementSet,
    pub meager: ElementSet,
    pub hypermeager: ElementSet,
    pub center: ElementSet,
    pub principal: ElementSet,
    pub blocks: Vec<ElementSet>,
    pub flags: Flags,
}

impl StructureReport {
    pub fn compute(e: &FiniteEffectAlgebra) -> Self {
        let sharp = sharp_elements(e);
        let meager = elements::meager_elements_with(e, &sharp);
        let bounds = bounds::sharp_bounds_with(e, &sharp);
        let triple = |(a, b, c): (ElementId, ElementId, ElementId)| vec![a, b, c];
        let flags = Flags {
            homogeneous: Flag::from_witness(riesz::homogeneity_witness(e).err().map(triple)),
            rdp: Flag::from_witness(riesz::rdp_witness(e).err().map(triple)),
            lattice: Flag::from_witness(order::lattice_witness(e).err().map(|(x, y)| vec![x, y])),
            sharply_dominating: Flag::from_witness(bounds.first_gap().map(|(x, _)| vec![x])),
            archimedean: Flag::from_witness(
                e.ids()
                    .find(|&x| x != e.zero() && !matches!(e.ord(x), crate::OrdValue::Finite(_)))
                    .map(|x| vec![x]),
            ),
            orthoalgebra: Flag::from_witness(elements::orthoalgebra_witness(e).map(|x| vec![x])),
        };
        StructureReport {
            hypermeager: hypermeager_elements(e),
            center: central_elements(e),
            principal: principal_elements(e),
            blocks: blocks(e),
            sharp,
            meager,
            flags,
        }
    }

    /// Whether the triple construction applies (finite algebras are always
    /// meager-orthocomplete).
    pub fn qualifies(&self) -> bool {
        self.flags.homogeneous.holds && self.flags.sharply_dominating.holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_chain};

    #[test]
    fn diamond_report() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        let r = StructureReport::compute(&e);
        assert!(r.flags.homogeneous.holds);
        assert!(!r.flags.rdp.holds);
        assert_eq!(r.flags.rdp.witness.as_ref().map(Vec::len), Some(3));
        assert!(r.flags.lattice.holds);
        assert!(!r.flags.orthoalgebra.holds);
        assert!(r.qualifies());
        assert_eq!(r.blocks.len(), 2);
        assert_eq!(r.sharp.intersection(&r.meager).to_vec(), vec![e.zero()]);
    }
}
