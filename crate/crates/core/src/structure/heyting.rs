//! Checks that a block is a Heyting effect algebra with pseudocomplement
//! `x* = (x^)'`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::structure::bounds::SharpBounds;
use crate::structure::elements::central_elements;
use crate::structure::order::{lattice_witness, poset_meet};
use crate::structure::riesz::rdp_witness;
use crate::table::ElementId;

/// The first clause a block fails, with witnesses in the ids of `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum HeytingFailure {
    NotSubAlgebra,
    MissingSharpBound {
        x: ElementId,
    },
    NotLattice {
        x: ElementId,
        y: ElementId,
    },
    NoRieszDecomposition {
        u: ElementId,
        v1: ElementId,
        v2: ElementId,
    },
    StarOutsideBlock {
        x: ElementId,
        star: ElementId,
    },
    PseudocomplementLaw {
        x: ElementId,
        y: ElementId,
    },
    HeytingCenterMismatch {
        x: ElementId,
    },
}

impl fmt::Display for HeytingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSubAlgebra => write!(f, "block is not a sub-effect algebra"),
            Self::MissingSharpBound { x } => write!(f, "{x} has no least sharp element above it"),
            Self::NotLattice { x, y } => write!(f, "{x} and {y} lack a meet or join in the block"),
            Self::NoRieszDecomposition { u, v1, v2 } => {
                write!(f, "{u} <= {v1} + {v2} does not split inside the block")
            }
            Self::StarOutsideBlock { x, star } => write!(f, "{x}* = {star} is outside the block"),
            Self::PseudocomplementLaw { x, y } => {
                write!(f, "meet({x}, {y}) = 0 disagrees with {x} <= {y}*")
            }
            Self::HeytingCenterMismatch { x } => {
                write!(
                    f,
                    "{x} is in exactly one of the Heyting center and the center"
                )
            }
        }
    }
}

/// Verifies that `block` is an MV-effect algebra (lattice with RDP) on
/// which `x* = (x^)'` is a pseudocomplementation whose image is the center
/// of the block.
pub fn heyting_block_check(
    e: &FiniteEffectAlgebra,
    bounds: &SharpBounds,
    block: &ElementSet,
) -> Result<(), HeytingFailure> {
    if !e.is_sub_effect_algebra(block) {
        return Err(HeytingFailure::NotSubAlgebra);
    }
    let (b, embed) = e
        .restrict(block)
        .map_err(|_| HeytingFailure::NotSubAlgebra)?;
    let up = |x: ElementId| embed[x.index()];
    let mut local = vec![None; e.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x.index()] = Some(ElementId::new(i));
    }
    let down = |x: ElementId| local[x.index()];

    if let Err((x, y)) = lattice_witness(&b) {
        return Err(HeytingFailure::NotLattice { x: up(x), y: up(y) });
    }
    if let Err((u, v1, v2)) = rdp_witness(&b) {
        return Err(HeytingFailure::NoRieszDecomposition {
            u: up(u),
            v1: up(v1),
            v2: up(v2),
        });
    }

    let mut star = Vec::with_capacity(b.order());
    for x in b.ids() {
        let hat = bounds
            .hat(up(x))
            .ok_or(HeytingFailure::MissingSharpBound { x: up(x) })?;
        let s = e.orthosupplement(hat);
        let local_s = down(s).ok_or(HeytingFailure::StarOutsideBlock { x: up(x), star: s })?;
        star.push(local_s);
    }

    for x in b.ids() {
        for y in b.ids() {
            let disjoint = poset_meet(&b, x, y) == Some(b.zero());
            if disjoint != b.leq(x, star[y.index()]) {
                return Err(HeytingFailure::PseudocomplementLaw { x: up(x), y: up(y) });
            }
        }
    }

    let heyting_center = ElementSet::from_ids(b.order(), star.iter().copied());
    let center = central_elements(&b);
    if let Some(x) = b
        .ids()
        .find(|&x| heyting_center.contains(x) != center.contains(x))
    {
        return Err(HeytingFailure::HeytingCenterMismatch { x: up(x) });
    }
    Ok(())
}
