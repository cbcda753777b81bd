//! Seeded random effect algebras drawn from the enumeration search tree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{supplement_with_fixed_points, Partial, DEFAULT_MAX_ORDER};
use crate::algebra::FiniteEffectAlgebra;
use crate::error::{Error, Result};
use crate::table::ElementId;

fn descend(p: &mut Partial, k: usize, rng: &mut ChaCha8Rng) -> Option<FiniteEffectAlgebra> {
    let Some(&(i, j)) = p.open.get(k) else {
        return p.clone().into_algebra();
    };
    let mut options = p.candidates(i, j);
    options.shuffle(rng);
    for v in options {
        p.set(i, j, v);
        if p.consistent_after(i, j) {
            if let Some(e) = descend(p, k + 1, rng) {
                return Some(e);
            }
        }
    }
    None
}

/// A random effect algebra of the given order, reproducible from `seed`.
///
/// Picks a random orthosupplement shape, fills the open cells by a
/// depth-first search with shuffled branches, and applies a random
/// relabeling.
pub fn random_algebra(seed: u64, order: usize) -> Result<FiniteEffectAlgebra> {
    random_algebra_with_bound(seed, order, DEFAULT_MAX_ORDER + 2)
}

pub fn random_algebra_with_bound(
    seed: u64,
    order: usize,
    bound: usize,
) -> Result<FiniteEffectAlgebra> {
    if order < 2 || order > bound {
        return Err(Error::Refused(format!(
            "random algebras need 2 <= order <= {bound}, got {order}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = order - 2;
    let fixed: Vec<usize> = (0..=m).filter(|f| (m - f).is_multiple_of(2)).collect();
    loop {
        let f = fixed[rng.gen_range(0..fixed.len())];
        let mut p = Partial::new(order, &supplement_with_fixed_points(order, f));
        if let Some(e) = descend(&mut p, 0, &mut rng) {
            let mut perm: Vec<ElementId> = (0..order).map(ElementId::new).collect();
            perm.shuffle(&mut rng);
            return Ok(e.relabel(&perm));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        for seed in 0..20 {
            assert_eq!(
                random_algebra(seed, 5).unwrap(),
                random_algebra(seed, 5).unwrap()
            );
        }
        assert!(random_algebra(1, 1).is_err());
    }
}
