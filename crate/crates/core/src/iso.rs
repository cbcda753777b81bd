//! Isomorphism testing and canonical forms.
//!
//! [`find_isomorphism`] is a direct backtracking search pruned by
//! per-element invariants. [`canonical_form`] uses a separate
//! individualization/refinement search: colors are refined by the multiset
//! of `(color(y), color(x + y))` pairs, cells are split one element at a
//! time, and every discrete coloring yields a relabeled table; the
//! lexicographically least one is the canonical table.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, OrdValue, PartialAlgebra};
use crate::format::serialize;
use crate::structure::elements::sharp_elements;
use crate::table::{ElementId, UNDEFINED};

/// A bijection `mapping[a] = b` from the elements of one algebra to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub mapping: Vec<ElementId>,
}

impl IsoWitness {
    /// Re-checks bijectivity and preservation of 0, 1 and the partial sum
    /// (definedness and value) in both directions.
    pub fn verify(&self, a: &FiniteEffectAlgebra, b: &FiniteEffectAlgebra) -> bool {
        let f = &self.mapping;
        if a.order() != b.order() || f.len() != a.order() {
            return false;
        }
        let mut hit = vec![false; b.order()];
        for &y in f {
            if y.index() >= b.order() || std::mem::replace(&mut hit[y.index()], true) {
                return false;
            }
        }
        if f[a.zero().index()] != b.zero() || f[a.one().index()] != b.one() {
            return false;
        }
        a.ids().all(|x| {
            a.ids()
                .all(|y| a.sum(x, y).map(|z| f[z.index()]) == b.sum(f[x.index()], f[y.index()]))
        })
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![ElementId(0); self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y.index()] = ElementId::new(x);
        }
        IsoWitness { mapping: inv }
    }
}

/// Per-element isomorphism invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Invariant {
    ord: usize,
    height: usize,
    sharp: bool,
    below: usize,
    degree: usize,
}

fn invariants(e: &FiniteEffectAlgebra) -> Vec<Invariant> {
    let sharp = sharp_elements(e);
    let mut height = vec![0usize; e.order()];
    let mut by_size: Vec<ElementId> = e.ids().collect();
    by_size.sort_by_key(|&x| e.down_set(x).len());
    for &x in &by_size {
        height[x.index()] = e
            .down_set(x)
            .iter()
            .filter(|&y| y != x)
            .map(|y| height[y.index()] + 1)
            .max()
            .unwrap_or(0);
    }
    e.ids()
        .map(|x| Invariant {
            ord: match e.ord(x) {
                OrdValue::Finite(n) => n,
                OrdValue::Infinite => usize::MAX,
            },
            height: height[x.index()],
            sharp: sharp.contains(x),
            below: e.down_set(x).len(),
            degree: e.table().row_degree(x),
        })
        .collect()
}

/// Finds an isomorphism `a -> b`, if one exists.
pub fn find_isomorphism(a: &FiniteEffectAlgebra, b: &FiniteEffectAlgebra) -> Option<IsoWitness> {
    if a.order() != b.order() {
        return None;
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut class_size: BTreeMap<Invariant, usize> = BTreeMap::new();
    for inv in &ia {
        *class_size.entry(*inv).or_default() += 1;
    }
    // Assign rare elements first.
    let mut order: Vec<ElementId> = a.ids().collect();
    order.sort_by_key(|x| (class_size[&ia[x.index()]], x.index()));

    let n = a.order();
    let mut forward = vec![None; n];
    let mut used = vec![false; n];
    let found = assign(a, b, &ia, &ib, &order, 0, &mut forward, &mut used);
    found.then(|| IsoWitness {
        mapping: forward.into_iter().map(|x| x.expect("complete")).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &FiniteEffectAlgebra,
    b: &FiniteEffectAlgebra,
    ia: &[Invariant],
    ib: &[Invariant],
    order: &[ElementId],
    depth: usize,
    forward: &mut [Option<ElementId>],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in b.ids() {
        if used[y.index()] || ia[x.index()] != ib[y.index()] {
            continue;
        }
        forward[x.index()] = Some(y);
        if consistent(a, b, forward, x) {
            used[y.index()] = true;
            if assign(a, b, ia, ib, order, depth + 1, forward, used) {
                return true;
            }
            used[y.index()] = false;
        }
        forward[x.index()] = None;
    }
    false
}

/// Checks every sum involving `x` and already-mapped elements.
fn consistent(
    a: &FiniteEffectAlgebra,
    b: &FiniteEffectAlgebra,
    forward: &[Option<ElementId>],
    x: ElementId,
) -> bool {
    let fx = forward[x.index()].expect("just assigned");
    for w in a.ids() {
        let Some(fw) = forward[w.index()] else {
            continue;
        };
        match (a.sum(x, w), b.sum(fx, fw)) {
            (None, None) => {}
            (Some(z), Some(fz)) => {
                if let Some(mapped) = forward[z.index()] {
                    if mapped != fz {
                        return false;
                    }
                }
            }
            _ => return false,
        }
    }
    // Sums landing on x must come from pairs landing on f(x).
    for u in a.ids() {
        let Some(fu) = forward[u.index()] else {
            continue;
        };
        for v in a.ids() {
            let Some(fv) = forward[v.index()] else {
                continue;
            };
            if (a.sum(u, v) == Some(x)) != (b.sum(fu, fv) == Some(fx)) {
                return false;
            }
        }
    }
    true
}

fn refine(e: &FiniteEffectAlgebra, colors: &mut Vec<u32>) {
    let n = e.order();
    loop {
        let signatures: Vec<(u32, Vec<(u32, u32)>)> = e
            .ids()
            .map(|x| {
                let mut row: Vec<(u32, u32)> = e
                    .ids()
                    .map(|y| {
                        let s = e.sum(x, y).map_or(UNDEFINED, |z| colors[z.index()]);
                        (colors[y.index()], s)
                    })
                    .collect();
                row.sort_unstable();
                (colors[x.index()], row)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<(u32, u32)>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present") as u32)
            .collect();
        let stable = count_distinct(&next) == count_distinct(colors);
        *colors = next;
        if stable || count_distinct(colors) == n {
            return;
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<(u32, bool)> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i != v))
        .collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present") as u32)
        .collect()
}

/// Relabeled cells of `e` under a discrete coloring, prefixed by the images
/// of 0 and 1.
fn certificate(e: &FiniteEffectAlgebra, colors: &[u32]) -> Vec<u32> {
    let n = e.order();
    let mut cells = vec![UNDEFINED; n * n + 2];
    cells[0] = colors[e.zero().index()];
    cells[1] = colors[e.one().index()];
    for x in e.ids() {
        for y in e.ids() {
            if let Some(z) = e.sum(x, y) {
                cells[2 + colors[x.index()] as usize * n + colors[y.index()] as usize] =
                    colors[z.index()];
            }
        }
    }
    cells
}

fn search(e: &FiniteEffectAlgebra, mut colors: Vec<u32>, best: &mut Option<(Vec<u32>, Vec<u32>)>) {
    refine(e, &mut colors);
    let n = e.order();
    // First non-singleton cell in color order.
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(cell) = (0..n).find(|&c| counts[c] > 1) else {
        let cert = certificate(e, &colors);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, colors));
        }
        return;
    };
    for v in 0..n {
        if colors[v] as usize == cell {
            search(e, individualize(&colors, v), best);
        }
    }
}

/// Relabeling `old -> new` taking `e` to its canonical form.
pub fn canonical_labeling(e: &FiniteEffectAlgebra) -> Vec<ElementId> {
    let mut best = None;
    search(e, vec![0; e.order()], &mut best);
    let (_, colors) = best.expect("at least one leaf");
    colors.into_iter().map(ElementId).collect()
}

/// A compact certificate: equal for two algebras iff they are isomorphic.
pub fn canonical_certificate(e: &FiniteEffectAlgebra) -> Vec<u32> {
    let mut best = None;
    search(e, vec![0; e.order()], &mut best);
    best.expect("at least one leaf").0
}

/// The canonically relabeled algebra, without element names.
pub fn canonical_algebra(e: &FiniteEffectAlgebra) -> FiniteEffectAlgebra {
    e.relabel(&canonical_labeling(e)).without_names()
}

/// Canonical byte sequence: the text serialization of the canonically
/// relabeled algebra.
pub fn canonical_form(e: &FiniteEffectAlgebra) -> Vec<u8> {
    serialize(&canonical_algebra(e)).into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_boolean, make_chain, named_catalog};

    fn reversed(e: &FiniteEffectAlgebra) -> FiniteEffectAlgebra {
        let n = e.order();
        let perm: Vec<ElementId> = (0..n).rev().map(ElementId::new).collect();
        e.relabel(&perm)
    }

    #[test]
    fn identity_and_permuted_copies() {
        for e in [make_chain(3).unwrap(), make_boolean(3).unwrap()] {
            let w = find_isomorphism(&e, &e).unwrap();
            assert!(w.verify(&e, &e));
            let r = reversed(&e);
            let w = find_isomorphism(&e, &r).unwrap();
            assert!(w.verify(&e, &r));
            assert!(w.inverse().verify(&r, &e));
            assert_eq!(canonical_form(&e), canonical_form(&r));
        }
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        let a = make_chain(2).unwrap();
        let b = make_boolean(2).unwrap();
        assert!(find_isomorphism(&a, &b).is_none());
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn same_order_non_isomorphic() {
        let a = make_chain(3).unwrap();
        let b = make_boolean(2).unwrap();
        let c = horizontal_sum(&[make_chain(2).unwrap(), make_chain(2).unwrap()]).unwrap();
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert!(find_isomorphism(x, y).is_none());
            assert_ne!(canonical_form(x), canonical_form(y));
        }
    }

    #[test]
    fn two_element_canonical_form_is_fixed() {
        let e = make_chain(1).unwrap();
        assert_eq!(
            String::from_utf8(canonical_form(&e)).unwrap(),
            "efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\nsum 0 1 1\n"
        );
    }

    #[test]
    fn named_catalog_forms_are_distinct() {
        let forms: Vec<Vec<u8>> = named_catalog()
            .iter()
            .map(|c| canonical_form(&c.algebra))
            .collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), forms.len());
    }
}
