//! Named constructions, the built-in catalog, exhaustive enumeration and
//! random generation.

mod enumerate;
mod random;

pub use enumerate::{
    enumerate_all, enumerate_order, enumerate_with_bound, estimated_cost, EnumerationStats,
    DEFAULT_MAX_ORDER,
};
pub use random::{random_algebra, random_algebra_with_bound};

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::error::{Error, Result};
use crate::table::{ElementId, PartialOpTable};

/// Largest `k` accepted by [`make_boolean`].
pub const MAX_BOOLEAN_ATOMS: usize = 8;

/// The `(n + 1)`-element chain `0 < 1 < ... < n` with `i + j` defined iff
/// `i + j <= n`.
pub fn make_chain(n: usize) -> Result<FiniteEffectAlgebra> {
    if n == 0 {
        return Err(Error::Refused(
            "a chain needs n >= 1 (0 = 1 otherwise)".into(),
        ));
    }
    let mut table = PartialOpTable::undefined(n + 1);
    for i in 0..=n {
        for j in 0..=n - i {
            table.set(
                ElementId::new(i),
                ElementId::new(j),
                Some(ElementId::new(i + j)),
            );
        }
    }
    FiniteEffectAlgebra::new(table, ElementId(0), ElementId::new(n))
}

/// Subsets of a `k`-element set under disjoint union; element ids are the
/// subset bitmasks.
pub fn make_boolean(k: usize) -> Result<FiniteEffectAlgebra> {
    if k == 0 || k > MAX_BOOLEAN_ATOMS {
        return Err(Error::Refused(format!(
            "boolean algebra needs 1 <= k <= {MAX_BOOLEAN_ATOMS}, got {k}"
        )));
    }
    let n = 1usize << k;
    let mut table = PartialOpTable::undefined(n);
    for a in 0..n {
        for b in 0..n {
            if a & b == 0 {
                table.set(
                    ElementId::new(a),
                    ElementId::new(b),
                    Some(ElementId::new(a | b)),
                );
            }
        }
    }
    FiniteEffectAlgebra::new(table, ElementId(0), ElementId::new(n - 1))
}

/// Glues the summands along their zeros and units. The result lists 0
/// first, then the remaining elements of each summand in summand order,
/// then 1. Two-element summands contribute nothing and are absorbed.
pub fn horizontal_sum(summands: &[FiniteEffectAlgebra]) -> Result<FiniteEffectAlgebra> {
    if summands.is_empty() {
        return Err(Error::Refused("horizontal sum of an empty list".into()));
    }
    let mut maps: Vec<Vec<ElementId>> = Vec::with_capacity(summands.len());
    let mut next = 1usize;
    for s in summands {
        let mut map = vec![ElementId(0); s.order()];
        for x in s.ids() {
            if x != s.zero() && x != s.one() {
                map[x.index()] = ElementId::new(next);
                next += 1;
            }
        }
        maps.push(map);
    }
    let one = ElementId::new(next);
    for (s, map) in summands.iter().zip(&mut maps) {
        map[s.one().index()] = one;
    }
    let mut table = PartialOpTable::undefined(next + 1);
    for (s, map) in summands.iter().zip(&maps) {
        for x in s.ids() {
            for y in s.ids() {
                if let Some(z) = s.sum(x, y) {
                    table.set(map[x.index()], map[y.index()], Some(map[z.index()]));
                }
            }
        }
    }
    FiniteEffectAlgebra::new(table, ElementId(0), one)
}

/// Componentwise product; `(a, b)` has id `a * |B| + b`.
pub fn direct_product(
    a: &FiniteEffectAlgebra,
    b: &FiniteEffectAlgebra,
) -> Result<FiniteEffectAlgebra> {
    let nb = b.order();
    let pair = |x: ElementId, y: ElementId| ElementId::new(x.index() * nb + y.index());
    let mut table = PartialOpTable::undefined(a.order() * nb);
    for x1 in a.ids() {
        for x2 in a.ids() {
            let Some(x) = a.sum(x1, x2) else { continue };
            for y1 in b.ids() {
                for y2 in b.ids() {
                    if let Some(y) = b.sum(y1, y2) {
                        table.set(pair(x1, y1), pair(x2, y2), Some(pair(x, y)));
                    }
                }
            }
        }
    }
    FiniteEffectAlgebra::new(table, pair(a.zero(), b.zero()), pair(a.one(), b.one()))
}

/// Golden values a catalog entry's computed report must match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedReport {
    pub sharp: Vec<ElementId>,
    pub meager: Vec<ElementId>,
    pub hypermeager: Vec<ElementId>,
    pub center: Vec<ElementId>,
    pub block_count: usize,
    pub homogeneous: bool,
    pub lattice: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: FiniteEffectAlgebra,
    pub expected: Option<ExpectedReport>,
}

fn ids(range: impl IntoIterator<Item = usize>) -> Vec<ElementId> {
    range.into_iter().map(ElementId::new).collect()
}

/// Chain facts: `Sh = {0, n}`, `Mea = [0, n)`, `HMea = {k : 2k <= n}`, the
/// center is `{0, n}` and the chain is its own block.
fn chain_entry(n: usize) -> CatalogEntry {
    CatalogEntry {
        name: format!("chain{}", n + 1),
        algebra: make_chain(n).expect("n >= 1"),
        expected: Some(ExpectedReport {
            sharp: ids([0, n]),
            meager: ids(0..n),
            hypermeager: ids((0..=n).filter(|k| 2 * k <= n)),
            center: ids([0, n]),
            block_count: 1,
            homogeneous: true,
            lattice: true,
        }),
    }
}

/// Boolean facts: every element is sharp and central, only 0 is meager, and
/// the whole algebra is the only block.
fn boolean_entry(k: usize) -> CatalogEntry {
    let n = 1usize << k;
    CatalogEntry {
        name: format!("boolean{n}"),
        algebra: make_boolean(k).expect("small k"),
        expected: Some(ExpectedReport {
            sharp: ids(0..n),
            meager: ids([0]),
            hypermeager: ids([0]),
            center: ids(0..n),
            block_count: 1,
            homogeneous: true,
            lattice: true,
        }),
    }
}

fn plain(name: &str, algebra: FiniteEffectAlgebra) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        algebra,
        expected: None,
    }
}

/// The built-in named examples, in a fixed order.
pub fn named_catalog() -> Vec<CatalogEntry> {
    let chain = |n| make_chain(n).expect("n >= 1");
    let mut out: Vec<CatalogEntry> = (1..=6).map(chain_entry).collect();
    out.push(boolean_entry(2));
    out.push(boolean_entry(3));

    // {0, a, b, 1} with a + a = 1 = b + b: blocks {0, a, 1} and {0, b, 1};
    // only 0 and 1 are sharp, and a, b are each below their own supplement.
    out.push(CatalogEntry {
        name: "diamond".into(),
        algebra: horizontal_sum(&[chain(2), chain(2)]).expect("valid summands"),
        expected: Some(ExpectedReport {
            sharp: ids([0, 3]),
            meager: ids([0, 1, 2]),
            hypermeager: ids([0, 1, 2]),
            center: ids([0, 3]),
            block_count: 2,
            homogeneous: true,
            lattice: true,
        }),
    });
    let hsum = |parts: Vec<FiniteEffectAlgebra>| horizontal_sum(&parts).expect("valid summands");
    out.push(plain(
        "hsum_chain3_chain3_chain3",
        hsum(vec![chain(2), chain(2), chain(2)]),
    ));
    out.push(plain("hsum_chain3_chain4", hsum(vec![chain(2), chain(3)])));
    out.push(plain(
        "hsum_chain4_boolean4",
        hsum(vec![chain(3), make_boolean(2).unwrap()]),
    ));
    out.push(plain(
        "hsum_boolean4_boolean4",
        hsum(vec![make_boolean(2).unwrap(), make_boolean(2).unwrap()]),
    ));
    out.push(plain("hsum_chain5_chain3", hsum(vec![chain(4), chain(2)])));
    let product = |a: &FiniteEffectAlgebra, b: &FiniteEffectAlgebra| {
        direct_product(a, b).expect("valid factors")
    };
    out.push(plain(
        "product_chain3_chain2",
        product(&chain(2), &chain(1)),
    ));
    out.push(plain(
        "product_chain3_chain3",
        product(&chain(2), &chain(2)),
    ));
    out.push(plain(
        "product_chain4_chain2",
        product(&chain(3), &chain(1)),
    ));
    let diamond = hsum(vec![chain(2), chain(2)]);
    out.push(plain(
        "product_diamond_chain2",
        product(&diamond, &chain(1)),
    ));
    out.push(plain(
        "product_diamond_chain3",
        product(&diamond, &chain(2)),
    ));
    out.push(plain("nonhomogeneous6", nonhomogeneous_order6()));
    out.push(plain(
        "hsum_product_chain3_chain2_chain3",
        hsum(vec![product(&chain(2), &chain(1)), chain(2)]),
    ));
    out
}

/// The only non-homogeneous effect algebra of order at most 6 (exhaustive
/// enumeration finds none below order 6). Here `1' = 3`, `2' = 4`, and
/// `1 <= 2 + 2 <= 1'` does not split.
fn nonhomogeneous_order6() -> FiniteEffectAlgebra {
    let sums: &[(usize, usize, usize)] = &[(1, 1, 3), (1, 2, 4), (1, 3, 5), (2, 2, 3), (2, 4, 5)];
    let mut table = PartialOpTable::undefined(6);
    for i in 0..6 {
        table.set_symmetric(ElementId(0), ElementId::new(i), Some(ElementId::new(i)));
    }
    for &(a, b, c) in sums {
        table.set_symmetric(
            ElementId::new(a),
            ElementId::new(b),
            Some(ElementId::new(c)),
        );
    }
    FiniteEffectAlgebra::new(table, ElementId(0), ElementId(5)).expect("valid table")
}

/// Looks up a catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    named_catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sizes_and_ord() {
        assert!(make_chain(0).is_err());
        let e = make_chain(4).unwrap();
        assert_eq!(e.order(), 5);
        assert_eq!(e.ord(ElementId(1)), crate::OrdValue::Finite(4));
        assert_eq!(e.orthosupplement(ElementId(1)), ElementId(3));
    }

    #[test]
    fn two_chain_is_absorbed() {
        let two = make_chain(1).unwrap();
        let three = make_chain(2).unwrap();
        assert_eq!(
            horizontal_sum(&[three.clone(), two.clone()]).unwrap(),
            three
        );
        assert_eq!(
            horizontal_sum(&[two.clone(), two.clone(), two])
                .unwrap()
                .order(),
            2
        );
        assert!(horizontal_sum(&[]).is_err());
    }

    #[test]
    fn single_summand_is_identity() {
        let e = make_chain(3).unwrap();
        assert_eq!(horizontal_sum(std::slice::from_ref(&e)).unwrap(), e);
    }

    #[test]
    fn product_bounds() {
        let p = direct_product(&make_chain(2).unwrap(), &make_chain(1).unwrap()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.zero(), ElementId(0));
        assert_eq!(p.one(), ElementId(5));
    }

    #[test]
    fn boolean_bounds() {
        assert!(make_boolean(0).is_err());
        assert!(make_boolean(MAX_BOOLEAN_ATOMS + 1).is_err());
        assert_eq!(make_boolean(1).unwrap(), make_chain(1).unwrap());
    }
}
