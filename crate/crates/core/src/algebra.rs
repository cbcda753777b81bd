//! Finite effect algebras and generalized effect algebras.
//!
//! Both structures are stored as a fully materialized [`PartialOpTable`].
//! Construction validates the axioms eagerly and precomputes the derived
//! order (`x <= y` iff `x + z = y` for some `z`) together with the partial
//! difference `y - x`, so every later query is a table lookup.

use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, InputError, Result};
use crate::table::{ElementId, PartialOpTable, UNDEFINED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    /// The zero and unit elements coincide.
    DistinctBounds,
    E1,
    E2,
    E3Existence,
    E3Uniqueness,
    E4,
    GE1,
    GE2,
    GE3,
    GE4,
    GE5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::DistinctBounds => "0!=1",
            Axiom::E1 => "Ei",
            Axiom::E2 => "Eii",
            Axiom::E3Existence => "Eiii-existence",
            Axiom::E3Uniqueness => "Eiii-uniqueness",
            Axiom::E4 => "Eiv",
            Axiom::GE1 => "GE1",
            Axiom::GE2 => "GE2",
            Axiom::GE3 => "GE3",
            Axiom::GE4 => "GE4",
            Axiom::GE5 => "GE5",
        };
        f.write_str(s)
    }
}

/// One violated axiom together with its lexicographically least witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<ElementId>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|e| e.to_string()).collect();
        write!(f, "({}) witness ({})", self.axiom, w.join(", "))
    }
}

/// Result of an axiom check: empty means every axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Axioms(self.violations))
        }
    }
}

fn check_index(id: ElementId, order: usize) -> Result<(), InputError> {
    if id.index() >= order {
        Err(InputError::OutOfRange {
            index: id.index(),
            order,
        })
    } else {
        Ok(())
    }
}

fn first_asymmetry(table: &PartialOpTable) -> Option<Vec<ElementId>> {
    for a in table.ids() {
        for b in table.ids().skip(a.index()) {
            if table.get(a, b) != table.get(b, a) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn first_non_associative(table: &PartialOpTable) -> Option<Vec<ElementId>> {
    for a in table.ids() {
        for b in table.ids() {
            let ab = table.get(a, b);
            for c in table.ids() {
                let left = ab.and_then(|ab| table.get(ab, c));
                let right = table.get(b, c).and_then(|bc| table.get(a, bc));
                if left != right {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Checks (Ei)-(Eiv) and `0 != 1` over every pair and triple of elements.
pub fn verify_effect_algebra(
    table: &PartialOpTable,
    zero: ElementId,
    one: ElementId,
) -> Result<Verdict, InputError> {
    let n = table.order();
    check_index(zero, n)?;
    check_index(one, n)?;
    let mut violations = Vec::new();
    let mut push = |axiom, witness| violations.push(Violation { axiom, witness });

    if zero == one {
        push(Axiom::DistinctBounds, vec![zero]);
    }
    if let Some(w) = first_asymmetry(table) {
        push(Axiom::E1, w);
    }
    if let Some(w) = first_non_associative(table) {
        push(Axiom::E2, w);
    }
    let mut missing = None;
    let mut ambiguous = None;
    for a in table.ids() {
        let mut hits = table.ids().filter(|&b| table.get(a, b) == Some(one));
        match (hits.next(), hits.next()) {
            (None, _) => {
                missing.get_or_insert(vec![a]);
            }
            (Some(b1), Some(b2)) => {
                ambiguous.get_or_insert(vec![a, b1, b2]);
            }
            _ => {}
        }
    }
    if let Some(w) = missing {
        push(Axiom::E3Existence, w);
    }
    if let Some(w) = ambiguous {
        push(Axiom::E3Uniqueness, w);
    }
    if let Some(a) = table
        .ids()
        .find(|&a| a != zero && table.get(one, a).is_some())
    {
        push(Axiom::E4, vec![one, a]);
    }
    Ok(Verdict { violations })
}

/// Checks (GE1)-(GE5).
pub fn verify_generalized(table: &PartialOpTable, zero: ElementId) -> Result<Verdict, InputError> {
    let n = table.order();
    check_index(zero, n)?;
    let mut violations = Vec::new();
    let mut push = |axiom, witness| violations.push(Violation { axiom, witness });

    if let Some(w) = first_asymmetry(table) {
        push(Axiom::GE1, w);
    }
    if let Some(w) = first_non_associative(table) {
        push(Axiom::GE2, w);
    }
    'ge3: for a in table.ids() {
        for b in table.ids() {
            let Some(ab) = table.get(a, b) else { continue };
            for c in table.ids().skip(b.index() + 1) {
                if table.get(a, c) == Some(ab) {
                    push(Axiom::GE3, vec![a, b, c]);
                    break 'ge3;
                }
            }
        }
    }
    'ge4: for a in table.ids() {
        for b in table.ids() {
            if table.get(a, b) == Some(zero) && (a != zero || b != zero) {
                push(Axiom::GE4, vec![a, b]);
                break 'ge4;
            }
        }
    }
    if let Some(a) = table.ids().find(|&a| table.get(a, zero) != Some(a)) {
        push(Axiom::GE5, vec![a, zero]);
    }
    Ok(Verdict { violations })
}

/// Common read access to a structure with a partial sum and a zero.
pub trait PartialAlgebra {
    fn table(&self) -> &PartialOpTable;
    fn zero(&self) -> ElementId;

    fn order(&self) -> usize {
        self.table().order()
    }

    #[inline]
    fn sum(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.table().get(a, b)
    }

    fn ids(&self) -> std::iter::Map<std::ops::Range<usize>, fn(usize) -> ElementId> {
        (0..self.order()).map(ElementId::new as fn(usize) -> ElementId)
    }

    /// Left fold of the partial sum; the empty family sums to zero.
    fn orthogonal_sum(&self, family: &[ElementId]) -> Option<ElementId> {
        family
            .iter()
            .try_fold(self.zero(), |acc, &x| self.sum(acc, x))
    }

    /// `k * x`, i.e. the orthogonal sum of `k` copies of `x`.
    fn multiple(&self, k: usize, x: ElementId) -> Option<ElementId> {
        (0..k).try_fold(self.zero(), |acc, _| self.sum(acc, x))
    }

    /// Largest `n` such that `n * x` is defined.
    fn ord(&self, x: ElementId) -> OrdValue {
        if x == self.zero() {
            return OrdValue::Infinite;
        }
        let mut acc = x;
        // Each step strictly increases, so a finite algebra cannot exceed
        // `order` steps unless it is not cancellative.
        for n in 1..=self.order() {
            match self.sum(acc, x) {
                Some(next) => acc = next,
                None => return OrdValue::Finite(n),
            }
        }
        OrdValue::Infinite
    }

    fn is_archimedean(&self) -> bool {
        self.ids()
            .filter(|&x| x != self.zero())
            .all(|x| matches!(self.ord(x), OrdValue::Finite(_)))
    }
}

/// Value of `ord(x)`; zero (and only zero, in a validated algebra) is
/// reported as infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrdValue {
    Finite(usize),
    Infinite,
}

/// Derived order data shared by both algebra kinds.
#[derive(Clone)]
struct DerivedOrder {
    below: Vec<ElementSet>,
    above: Vec<ElementSet>,
    minus: Vec<u32>,
}

impl DerivedOrder {
    fn build(table: &PartialOpTable) -> Self {
        let n = table.order();
        let mut below = vec![ElementSet::empty(n); n];
        let mut above = vec![ElementSet::empty(n); n];
        let mut minus = vec![UNDEFINED; n * n];
        for x in table.ids() {
            for z in table.ids() {
                if let Some(y) = table.get(x, z) {
                    below[y.index()].insert(x);
                    above[x.index()].insert(y);
                    minus[y.index() * n + x.index()] = z.0;
                }
            }
        }
        DerivedOrder {
            below,
            above,
            minus,
        }
    }

    #[inline]
    fn ominus(&self, n: usize, y: ElementId, x: ElementId) -> Option<ElementId> {
        let v = self.minus[y.index() * n + x.index()];
        (v != UNDEFINED).then_some(ElementId(v))
    }
}

/// A validated finite effect algebra `(E; +, 0, 1)`.
#[derive(Clone)]
pub struct FiniteEffectAlgebra {
    table: PartialOpTable,
    zero: ElementId,
    one: ElementId,
    names: Option<Vec<String>>,
    supplement: Vec<ElementId>,
    derived: DerivedOrder,
}

impl FiniteEffectAlgebra {
    /// Validates the table and builds the algebra; invalid tables are refused.
    pub fn new(table: PartialOpTable, zero: ElementId, one: ElementId) -> Result<Self> {
        verify_effect_algebra(&table, zero, one)?.into_result()?;
        let supplement = table
            .ids()
            .map(|a| {
                table
                    .ids()
                    .find(|&b| table.get(a, b) == Some(one))
                    .expect("validated")
            })
            .collect();
        let derived = DerivedOrder::build(&table);
        Ok(FiniteEffectAlgebra {
            table,
            zero,
            one,
            names: None,
            supplement,
            derived,
        })
    }

    /// Attaches display labels, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::Input(InputError::OutOfRange {
                index: names.len(),
                order: self.order(),
            }));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.names {
            Some(n) => n[x.index()].clone(),
            None => x.to_string(),
        }
    }

    /// The unique `y` with `x + y = 1`.
    #[inline]
    pub fn orthosupplement(&self, x: ElementId) -> ElementId {
        self.supplement[x.index()]
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.derived.below[y.index()].contains(x)
    }

    /// `y - x`, defined iff `x <= y`.
    #[inline]
    pub fn ominus(&self, y: ElementId, x: ElementId) -> Option<ElementId> {
        self.derived.ominus(self.order(), y, x)
    }

    /// `{z | z <= x}`.
    pub fn down_set(&self, x: ElementId) -> &ElementSet {
        &self.derived.below[x.index()]
    }

    /// `{z | z >= x}`.
    pub fn up_set(&self, x: ElementId) -> &ElementSet {
        &self.derived.above[x.index()]
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    /// Sub-effect algebra test: contains 1, and whenever `x + y = z` with two
    /// of `x, y, z` in `set`, all three are in `set`.
    pub fn is_sub_effect_algebra(&self, set: &ElementSet) -> bool {
        if !set.contains(self.one) {
            return false;
        }
        for x in self.ids() {
            for y in self.ids() {
                if let Some(z) = self.sum(x, y) {
                    let inside =
                        set.contains(x) as u8 + set.contains(y) as u8 + set.contains(z) as u8;
                    if inside == 2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The structure induced on `set` (re-indexed in increasing id order),
    /// with the embedding back into `self`.
    pub fn restrict(&self, set: &ElementSet) -> Result<(FiniteEffectAlgebra, Vec<ElementId>)> {
        let (table, embed, index) = induced_table(self, set);
        let zero = index[self.zero.index()].ok_or_else(|| Error::Internal("0 missing".into()))?;
        let one = index[self.one.index()].ok_or_else(|| Error::Internal("1 missing".into()))?;
        Ok((FiniteEffectAlgebra::new(table, zero, one)?, embed))
    }

    /// The interval `[0, top]` with the restricted sum (defined iff the sum
    /// stays below `top`), as an effect algebra with unit `top`.
    pub fn interval(&self, top: ElementId) -> Result<(FiniteEffectAlgebra, Vec<ElementId>)> {
        let set = self.down_set(top).clone();
        let (table, embed, index) = induced_table(self, &set);
        let zero = index[self.zero.index()].expect("0 <= top");
        let one = index[top.index()].expect("top <= top");
        Ok((FiniteEffectAlgebra::new(table, zero, one)?, embed))
    }

    /// `set` with the sum restricted to results inside `set`, as a
    /// generalized effect algebra.
    pub fn restrict_generalized(
        &self,
        set: &ElementSet,
    ) -> Result<(FiniteGeneralizedEffectAlgebra, Vec<ElementId>)> {
        let (table, embed, index) = induced_table(self, set);
        let zero = index[self.zero.index()].ok_or_else(|| Error::Internal("0 missing".into()))?;
        Ok((FiniteGeneralizedEffectAlgebra::new(table, zero)?, embed))
    }

    /// The same algebra with elements renamed by `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[ElementId]) -> FiniteEffectAlgebra {
        let table = self.table.relabel(perm);
        let mut out =
            FiniteEffectAlgebra::new(table, perm[self.zero.index()], perm[self.one.index()])
                .expect("relabeling preserves the axioms");
        if let Some(names) = &self.names {
            let mut renamed = vec![String::new(); names.len()];
            for (old, name) in names.iter().enumerate() {
                renamed[perm[old].index()] = name.clone();
            }
            out.names = Some(renamed);
        }
        out
    }
}

/// Table induced on `set`; sums leaving `set` become undefined.
fn induced_table<A: PartialAlgebra>(
    algebra: &A,
    set: &ElementSet,
) -> (PartialOpTable, Vec<ElementId>, Vec<Option<ElementId>>) {
    let embed: Vec<ElementId> = set.to_vec();
    let mut index = vec![None; algebra.order()];
    for (i, &e) in embed.iter().enumerate() {
        index[e.index()] = Some(ElementId::new(i));
    }
    let mut table = PartialOpTable::undefined(embed.len());
    for (i, &a) in embed.iter().enumerate() {
        for (j, &b) in embed.iter().enumerate() {
            if let Some(c) = algebra.sum(a, b) {
                if let Some(ci) = index[c.index()] {
                    table.set(ElementId::new(i), ElementId::new(j), Some(ci));
                }
            }
        }
    }
    (table, embed, index)
}

impl PartialAlgebra for FiniteEffectAlgebra {
    fn table(&self) -> &PartialOpTable {
        &self.table
    }

    fn zero(&self) -> ElementId {
        self.zero
    }
}

impl fmt::Debug for FiniteEffectAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteEffectAlgebra")
            .field("order", &self.order())
            .field("zero", &self.zero)
            .field("one", &self.one)
            .field("table", &self.table)
            .finish()
    }
}

impl PartialEq for FiniteEffectAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
            && self.zero == other.zero
            && self.one == other.one
            && self.names == other.names
    }
}

impl Eq for FiniteEffectAlgebra {}

/// A validated finite generalized effect algebra `(G; +, 0)`.
#[derive(Clone)]
pub struct FiniteGeneralizedEffectAlgebra {
    table: PartialOpTable,
    zero: ElementId,
    derived: DerivedOrder,
}

impl FiniteGeneralizedEffectAlgebra {
    pub fn new(table: PartialOpTable, zero: ElementId) -> Result<Self> {
        verify_generalized(&table, zero)?.into_result()?;
        let derived = DerivedOrder::build(&table);
        Ok(FiniteGeneralizedEffectAlgebra {
            table,
            zero,
            derived,
        })
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.derived.below[y.index()].contains(x)
    }

    #[inline]
    pub fn ominus(&self, y: ElementId, x: ElementId) -> Option<ElementId> {
        self.derived.ominus(self.order(), y, x)
    }

    pub fn down_set(&self, x: ElementId) -> &ElementSet {
        &self.derived.below[x.index()]
    }

    pub fn up_set(&self, x: ElementId) -> &ElementSet {
        &self.derived.above[x.index()]
    }
}

impl PartialAlgebra for FiniteGeneralizedEffectAlgebra {
    fn table(&self) -> &PartialOpTable {
        &self.table
    }

    fn zero(&self) -> ElementId {
        self.zero
    }
}

impl fmt::Debug for FiniteGeneralizedEffectAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGeneralizedEffectAlgebra")
            .field("order", &self.order())
            .field("zero", &self.zero)
            .field("table", &self.table)
            .finish()
    }
}

impl PartialEq for FiniteGeneralizedEffectAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.zero == other.zero
    }
}

impl Eq for FiniteGeneralizedEffectAlgebra {}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(i: usize) -> ElementId {
        ElementId::new(i)
    }

    /// `{0, a, 1}` with `a + a = 1`.
    fn three_chain_table() -> PartialOpTable {
        PartialOpTable::from_rows(&[
            vec![Some(0), Some(1), Some(2)],
            vec![Some(1), Some(2), None],
            vec![Some(2), None, None],
        ])
        .unwrap()
    }

    /// `{0, p, q, 1}` with `p + p = q`, `p + q = 1`.
    fn four_chain() -> FiniteEffectAlgebra {
        let t = PartialOpTable::from_rows(&[
            vec![Some(0), Some(1), Some(2), Some(3)],
            vec![Some(1), Some(2), Some(3), None],
            vec![Some(2), Some(3), None, None],
            vec![Some(3), None, None, None],
        ])
        .unwrap();
        FiniteEffectAlgebra::new(t, id(0), id(3)).unwrap()
    }

    #[test]
    fn three_chain_is_valid() {
        let v = verify_effect_algebra(&three_chain_table(), id(0), id(2)).unwrap();
        assert!(v.is_ok(), "{v:?}");
        let e = FiniteEffectAlgebra::new(three_chain_table(), id(0), id(2)).unwrap();
        assert_eq!(e.orthosupplement(id(1)), id(1));
        assert_eq!(e.orthosupplement(id(0)), id(2));
        assert_eq!(e.orthosupplement(id(2)), id(0));
    }

    #[test]
    fn asymmetric_cell_reports_commutativity() {
        // {0, a, b, 1}: a + b = 1 recorded, b + a left undefined.
        let mut t = PartialOpTable::undefined(4);
        for x in 0..4 {
            t.set_symmetric(id(0), id(x), Some(id(x)));
        }
        t.set(id(1), id(2), Some(id(3)));
        let v = verify_effect_algebra(&t, id(0), id(3)).unwrap();
        assert!(v.violates(Axiom::E1));
        let w = v.violations.iter().find(|v| v.axiom == Axiom::E1).unwrap();
        assert_eq!(w.witness, vec![id(1), id(2)]);
    }

    #[test]
    fn out_of_range_bounds_are_input_errors() {
        let t = three_chain_table();
        assert_eq!(
            verify_effect_algebra(&t, id(0), id(7)),
            Err(InputError::OutOfRange { index: 7, order: 3 })
        );
        assert!(verify_generalized(&t, id(3)).is_err());
    }

    #[test]
    fn zero_equal_one_is_refused() {
        let t = PartialOpTable::from_rows(&[vec![Some(0)]]).unwrap();
        let v = verify_effect_algebra(&t, id(0), id(0)).unwrap();
        assert!(v.violates(Axiom::DistinctBounds));
    }

    #[test]
    fn unit_must_be_isolated() {
        // 3-chain plus a forbidden 1 + a.
        let mut t = three_chain_table();
        t.set_symmetric(id(2), id(1), Some(id(2)));
        let v = verify_effect_algebra(&t, id(0), id(2)).unwrap();
        assert!(v.violates(Axiom::E4));
    }

    #[test]
    fn truncated_naturals_are_generalized() {
        // {0, 1, 2} with 1 + 1 = 2 and nothing else above 2.
        let t = PartialOpTable::from_rows(&[
            vec![Some(0), Some(1), Some(2)],
            vec![Some(1), Some(2), None],
            vec![Some(2), None, None],
        ])
        .unwrap();
        assert!(verify_generalized(&t, id(0)).unwrap().is_ok());
    }

    #[test]
    fn sum_to_zero_violates_positivity() {
        let t =
            PartialOpTable::from_rows(&[vec![Some(0), Some(1)], vec![Some(1), Some(0)]]).unwrap();
        let v = verify_generalized(&t, id(0)).unwrap();
        assert!(v.violates(Axiom::GE4));
        let w = v.violations.iter().find(|v| v.axiom == Axiom::GE4).unwrap();
        assert_eq!(w.witness, vec![id(1), id(1)]);
    }

    #[test]
    fn four_chain_order_and_difference() {
        let e = four_chain();
        let (p, q) = (id(1), id(2));
        assert_eq!(e.orthosupplement(p), q);
        assert_eq!(e.ominus(q, p), Some(p));
        assert_eq!(e.ominus(p, q), None);
        for x in e.ids() {
            assert!(e.leq(e.zero(), x));
            assert!(e.leq(x, e.one()));
        }
        assert_eq!(e.ord(p), OrdValue::Finite(3));
        assert_eq!(e.ord(e.one()), OrdValue::Finite(1));
        assert_eq!(e.ord(e.zero()), OrdValue::Infinite);
    }

    #[test]
    fn orthogonal_sums() {
        let e = four_chain();
        assert_eq!(e.orthogonal_sum(&[]), Some(e.zero()));
        assert_eq!(e.orthogonal_sum(&[id(1), id(1), id(1)]), Some(id(3)));
        assert_eq!(e.orthogonal_sum(&[id(1), id(1), id(2)]), None);
        assert_eq!(e.orthogonal_sum(&[id(2), id(2)]), None);
    }

    #[test]
    fn interval_and_restriction() {
        let e = four_chain();
        let (interval, embed) = e.interval(id(2)).unwrap();
        assert_eq!(interval.order(), 3);
        assert_eq!(embed, vec![id(0), id(1), id(2)]);
        assert_eq!(interval.orthosupplement(id(1)), id(1));
        let sh = ElementSet::from_ids(4, [id(0), id(3)]);
        assert!(e.is_sub_effect_algebra(&sh));
        let (two, _) = e.restrict(&sh).unwrap();
        assert_eq!(two.order(), 2);
        let not_sub = ElementSet::from_ids(4, [id(0), id(1), id(3)]);
        assert!(!e.is_sub_effect_algebra(&not_sub));
    }
}
