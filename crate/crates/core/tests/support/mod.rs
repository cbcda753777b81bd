//! Brute-force oracles shared by the integration and acceptance tests.
//! Nothing here calls into the library's checking code.

#![allow(dead_code)]

use efalg_core::{ElementId, FiniteEffectAlgebra, PartialAlgebra};

/// A table as plain rows: `rows[a][b]` is `a + b`.
pub type Rows = Vec<Vec<Option<usize>>>;

pub fn rows_of(e: &FiniteEffectAlgebra) -> Rows {
    e.ids()
        .map(|a| e.ids().map(|b| e.sum(a, b).map(ElementId::index)).collect())
        .collect()
}

/// The four effect algebra axioms and `0 != 1`, read off literally over
/// every pair and triple.
pub fn naive_is_effect_algebra(rows: &Rows, zero: usize, one: usize) -> bool {
    let n = rows.len();
    if zero == one {
        return false;
    }
    let s = |a: usize, b: usize| rows[a][b];
    for a in 0..n {
        for b in 0..n {
            if s(a, b).is_some() && s(a, b) != s(b, a) {
                return false;
            }
            for c in 0..n {
                let left = s(a, b).and_then(|ab| s(ab, c));
                let right = s(b, c).and_then(|bc| s(a, bc));
                if (left.is_some() || right.is_some()) && left != right {
                    return false;
                }
            }
        }
        if (0..n).filter(|&b| s(a, b) == Some(one)).count() != 1 {
            return false;
        }
        if s(one, a).is_some() && a != zero {
            return false;
        }
    }
    true
}

/// Every symmetric table of order `n` with `0` as zero and `n - 1` as one
/// that passes [`naive_is_effect_algebra`]. Any effect algebra of order `n`
/// has an isomorphic copy with these labels, and (Ei) forces symmetry, so
/// this covers every isomorphism class.
pub fn naive_generate_and_filter(n: usize) -> Vec<Rows> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let values = n + 1;
    let total = (values as u64).pow(cells.len() as u32);
    let mut out = Vec::new();
    let mut rows: Rows = vec![vec![None; n]; n];
    for code in 0..total {
        let mut c = code;
        for &(i, j) in &cells {
            let v = (c % values as u64) as usize;
            c /= values as u64;
            let cell = (v < n).then_some(v);
            rows[i][j] = cell;
            rows[j][i] = cell;
        }
        if naive_is_effect_algebra(&rows, 0, n - 1) {
            out.push(rows.clone());
        }
    }
    out
}

/// Partial order by brute force: `x <= y` iff `x + z = y` for some `z`.
pub fn naive_leq(e: &FiniteEffectAlgebra, x: ElementId, y: ElementId) -> bool {
    e.ids().any(|z| e.sum(x, z) == Some(y))
}

/// Greatest lower bound by brute force over all elements.
pub fn naive_meet(e: &FiniteEffectAlgebra, x: ElementId, y: ElementId) -> Option<ElementId> {
    let lower: Vec<ElementId> = e
        .ids()
        .filter(|&w| naive_leq(e, w, x) && naive_leq(e, w, y))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&w| naive_leq(e, w, m)))
}

/// `x ∧ x' = 0`, with the supplement found by search.
pub fn naive_is_sharp(e: &FiniteEffectAlgebra, x: ElementId) -> bool {
    let sup = e
        .ids()
        .find(|&y| e.sum(x, y) == Some(e.one()))
        .expect("valid algebra");
    naive_meet(e, x, sup) == Some(e.zero())
}

/// Greatest sharp element below `x`, by search.
pub fn naive_tilde(e: &FiniteEffectAlgebra, x: ElementId) -> Option<ElementId> {
    let below: Vec<ElementId> = e
        .ids()
        .filter(|&s| naive_is_sharp(e, s) && naive_leq(e, s, x))
        .collect();
    below
        .iter()
        .copied()
        .find(|&m| below.iter().all(|&w| naive_leq(e, w, m)))
}
