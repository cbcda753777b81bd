//! Exhaustive enumeration of effect algebras up to isomorphism.
//!
//! Elements are labeled with 0 as zero and `n - 1` as one. Up to
//! relabeling the orthosupplement fixes some interior elements and swaps the
//! rest in adjacent pairs, so each involution shape is tried once: fixed
//! points `1..=f`, then pairs `(f+1, f+2), ...`. The remaining cells are
//! filled in row-major order; each assignment is checked for cancellation
//! and for associativity on every triple whose cells are all decided.
//! Completed tables are deduplicated by canonical certificate.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{verify_effect_algebra, FiniteEffectAlgebra};
use crate::error::{Error, Result};
use crate::iso::{canonical_algebra, canonical_certificate};
use crate::table::{ElementId, PartialOpTable, UNDEFINED};

/// Largest order [`enumerate_all`] accepts.
pub const DEFAULT_MAX_ORDER: usize = 6;

/// Marker for a cell that has not been decided yet.
const OPEN: u32 = u32::MAX - 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub nodes: u64,
    pub complete_tables: u64,
}

/// A partially filled table with a fixed orthosupplement.
#[derive(Clone)]
pub(crate) struct Partial {
    pub n: usize,
    pub cells: Vec<u32>,
    /// Open cells `(i, j)` with `i <= j`, in fill order.
    pub open: Vec<(usize, usize)>,
}

impl Partial {
    /// Fixed cells for the given orthosupplement involution; interior
    /// sums that are not supplements are left open.
    pub fn new(n: usize, supplement: &[usize]) -> Self {
        let one = n - 1;
        let mut cells = vec![UNDEFINED; n * n];
        let mut open = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = if i == 0 {
                    j as u32
                } else if j == 0 {
                    i as u32
                } else if supplement[i] == j {
                    one as u32
                } else if i == one || j == one {
                    UNDEFINED
                } else {
                    if i <= j {
                        open.push((i, j));
                    }
                    OPEN
                };
                cells[i * n + j] = v;
            }
        }
        Partial { n, cells, open }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let n = self.n;
        self.cells[i * n + j] = v;
        self.cells[j * n + i] = v;
    }

    /// Candidate values for an interior cell: undefined, or any interior
    /// element other than the two summands (cancellation and positivity).
    pub fn candidates(&self, i: usize, j: usize) -> Vec<u32> {
        let mut out = vec![UNDEFINED];
        out.extend(
            (1..self.n - 1)
                .filter(|&z| z != i && z != j)
                .map(|z| z as u32),
        );
        out
    }

    /// Checks the constraints touched by cell `(i, j)`.
    pub fn consistent_after(&self, i: usize, j: usize) -> bool {
        let v = self.get(i, j);
        if v != UNDEFINED {
            // Row cancellation: i + j = i + k forces j = k.
            for (a, b) in [(i, j), (j, i)] {
                for k in 0..self.n {
                    if k != b && self.get(a, k) == v {
                        return false;
                    }
                }
            }
        }
        self.associative_where_decided()
    }

    fn associative_where_decided(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == OPEN {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    if bc == OPEN {
                        continue;
                    }
                    let left = if ab == UNDEFINED {
                        UNDEFINED
                    } else {
                        self.get(ab as usize, c)
                    };
                    let right = if bc == UNDEFINED {
                        UNDEFINED
                    } else {
                        self.get(a, bc as usize)
                    };
                    if left == OPEN || right == OPEN {
                        continue;
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_table(&self) -> PartialOpTable {
        let mut t = PartialOpTable::undefined(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                debug_assert_ne!(v, OPEN);
                if v != UNDEFINED {
                    t.set(ElementId::new(i), ElementId::new(j), Some(ElementId(v)));
                }
            }
        }
        t
    }

    pub fn into_algebra(self) -> Option<FiniteEffectAlgebra> {
        let table = self.to_table();
        let one = ElementId::new(self.n - 1);
        let ok = verify_effect_algebra(&table, ElementId(0), one)
            .ok()?
            .is_ok();
        ok.then(|| FiniteEffectAlgebra::new(table, ElementId(0), one).expect("verified"))
    }
}

/// Orthosupplement maps in standard form for order `n`, one per number of
/// interior fixed points.
pub(crate) fn involution_shapes(n: usize) -> Vec<Vec<usize>> {
    let m = n - 2;
    (0..=m)
        .rev()
        .filter(|f| (m - f).is_multiple_of(2))
        .map(|f| supplement_with_fixed_points(n, f))
        .collect()
}

pub(crate) fn supplement_with_fixed_points(n: usize, f: usize) -> Vec<usize> {
    let mut s = vec![0; n];
    s[0] = n - 1;
    s[n - 1] = 0;
    for (x, slot) in s.iter_mut().enumerate().take(f + 1).skip(1) {
        *slot = x;
    }
    let mut x = f + 1;
    while x + 1 < n - 1 {
        s[x] = x + 1;
        s[x + 1] = x;
        x += 2;
    }
    s
}

fn complete(
    p: &mut Partial,
    k: usize,
    stats: &mut EnumerationStats,
    out: &mut Vec<FiniteEffectAlgebra>,
) {
    stats.nodes += 1;
    let Some(&(i, j)) = p.open.get(k) else {
        stats.complete_tables += 1;
        if let Some(e) = p.clone().into_algebra() {
            out.push(e);
        }
        return;
    };
    for v in p.candidates(i, j) {
        p.set(i, j, v);
        if p.consistent_after(i, j) {
            complete(p, k + 1, stats, out);
        }
    }
    p.set(i, j, OPEN);
}

/// Rough number of search nodes for order `n` before pruning.
pub fn estimated_cost(n: usize) -> f64 {
    if n < 3 {
        return 1.0;
    }
    let m = (n - 2) as f64;
    // About m(m+1)/2 open cells, each with up to m options.
    m.powf(m * (m + 1.0) / 2.0)
}

/// All effect algebras of exactly order `n`, one per isomorphism class, in
/// canonical form and sorted by canonical certificate.
pub fn enumerate_order(n: usize) -> (Vec<FiniteEffectAlgebra>, EnumerationStats) {
    if n < 2 {
        return (Vec::new(), EnumerationStats::default());
    }
    let results: Vec<(Vec<FiniteEffectAlgebra>, EnumerationStats)> = involution_shapes(n)
        .into_par_iter()
        .map(|s| {
            let mut p = Partial::new(n, &s);
            let mut stats = EnumerationStats::default();
            let mut out = Vec::new();
            complete(&mut p, 0, &mut stats, &mut out);
            (out, stats)
        })
        .collect();
    let mut stats = EnumerationStats::default();
    let mut classes: BTreeMap<Vec<u32>, FiniteEffectAlgebra> = BTreeMap::new();
    let all: Vec<FiniteEffectAlgebra> = results
        .into_iter()
        .flat_map(|(found, s)| {
            stats.nodes += s.nodes;
            stats.complete_tables += s.complete_tables;
            found
        })
        .collect();
    let certified: Vec<(Vec<u32>, FiniteEffectAlgebra)> = all
        .par_iter()
        .map(|e| (canonical_certificate(e), e.clone()))
        .collect();
    for (cert, e) in certified {
        classes.entry(cert).or_insert(e);
    }
    let out = classes
        .into_values()
        .map(|e| canonical_algebra(&e))
        .collect();
    (out, stats)
}

/// Every effect algebra of order `2..=max_order` up to isomorphism, within
/// an explicit bound.
pub fn enumerate_with_bound(max_order: usize, bound: usize) -> Result<Vec<FiniteEffectAlgebra>> {
    if max_order > bound {
        return Err(Error::Refused(format!(
            "order {max_order} exceeds the enumeration bound {bound}; \
             about {:.1e} search nodes before pruning",
            estimated_cost(max_order)
        )));
    }
    Ok((2..=max_order).flat_map(|n| enumerate_order(n).0).collect())
}

/// [`enumerate_with_bound`] with the default bound.
pub fn enumerate_all(max_order: usize) -> Result<Vec<FiniteEffectAlgebra>> {
    enumerate_with_bound(max_order, DEFAULT_MAX_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_chain;

    #[test]
    fn small_orders() {
        let (two, _) = enumerate_order(2);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0], canonical_algebra(&make_chain(1).unwrap()));
        let (three, _) = enumerate_order(3);
        assert_eq!(three.len(), 1);
        assert_eq!(three[0], canonical_algebra(&make_chain(2).unwrap()));
    }

    #[test]
    fn refusal_above_bound() {
        let err = enumerate_all(DEFAULT_MAX_ORDER + 1).unwrap_err();
        assert!(err.to_string().contains("search nodes"));
    }

    #[test]
    fn involution_shapes_are_involutions() {
        for n in 2..8 {
            for s in involution_shapes(n) {
                for x in 0..n {
                    assert_eq!(s[s[x]], x);
                }
                assert_eq!(s[0], n - 1);
            }
        }
    }
}
