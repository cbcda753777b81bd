//! Greatest sharp element below and least sharp element above each element.

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::error::{Error, HypothesisFailure, Result};
use crate::structure::elements::sharp_elements;
use crate::structure::order::{maximum, minimum};
use crate::table::ElementId;

/// Per-element sharp bounds; `None` where the bound does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpBounds {
    pub below: Vec<Option<ElementId>>,
    pub above: Vec<Option<ElementId>>,
}

impl SharpBounds {
    /// Greatest sharp element below `x`.
    pub fn tilde(&self, x: ElementId) -> Option<ElementId> {
        self.below[x.index()]
    }

    /// Least sharp element above `x`.
    pub fn hat(&self, x: ElementId) -> Option<ElementId> {
        self.above[x.index()]
    }

    /// First element missing a bound, naming which one.
    pub fn first_gap(&self) -> Option<(ElementId, &'static str)> {
        (0..self.below.len()).find_map(|i| {
            let x = ElementId::new(i);
            if self.below[i].is_none() {
                Some((x, "greatest lower"))
            } else if self.above[i].is_none() {
                Some((x, "least upper"))
            } else {
                None
            }
        })
    }

    pub fn is_total(&self) -> bool {
        self.first_gap().is_none()
    }
}

pub fn sharp_bounds_with(e: &FiniteEffectAlgebra, sharp: &ElementSet) -> SharpBounds {
    let below = e
        .ids()
        .map(|x| maximum(e, &e.down_set(x).intersection(sharp)))
        .collect();
    let above = e
        .ids()
        .map(|x| minimum(e, &e.up_set(x).intersection(sharp)))
        .collect();
    SharpBounds { below, above }
}

pub fn sharp_bounds(e: &FiniteEffectAlgebra) -> SharpBounds {
    sharp_bounds_with(e, &sharp_elements(e))
}

pub fn is_sharply_dominating(e: &FiniteEffectAlgebra) -> bool {
    sharp_bounds(e).is_total()
}

/// `x = x_S + x_M` with `x_S` the greatest sharp element below `x`.
pub fn decompose(e: &FiniteEffectAlgebra, x: ElementId) -> Result<(ElementId, ElementId)> {
    decompose_with(e, &sharp_bounds(e), x)
}

pub fn decompose_with(
    e: &FiniteEffectAlgebra,
    bounds: &SharpBounds,
    x: ElementId,
) -> Result<(ElementId, ElementId)> {
    if let Some((w, which)) = bounds.first_gap() {
        return Err(HypothesisFailure::NotSharplyDominating { x: w, which }.into());
    }
    let s = bounds.tilde(x).expect("total");
    let m = e
        .ominus(x, s)
        .ok_or_else(|| Error::Internal(format!("sharp bound {s} not below {x}")))?;
    Ok((s, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_boolean, make_chain};

    #[test]
    fn four_chain_bounds() {
        let e = make_chain(3).unwrap();
        let b = sharp_bounds(&e);
        for x in [1, 2].map(ElementId) {
            assert_eq!(b.hat(x), Some(e.one()));
            assert_eq!(b.tilde(x), Some(e.zero()));
        }
        assert_eq!(
            decompose(&e, ElementId(2)).unwrap(),
            (e.zero(), ElementId(2))
        );
        assert_eq!(decompose(&e, e.one()).unwrap(), (e.one(), e.zero()));
    }

    #[test]
    fn sharp_elements_bound_themselves() {
        let e = make_boolean(2).unwrap();
        let b = sharp_bounds(&e);
        for x in e.ids() {
            assert_eq!(b.hat(x), Some(x));
            assert_eq!(b.tilde(x), Some(x));
            assert_eq!(decompose(&e, x).unwrap(), (x, e.zero()));
        }
    }
}
