//! Element identifiers and fully materialized partial-operation tables.

use std::fmt;

use serde::Serialize;

use crate::error::InputError;

/// Index of an element; ids of an algebra of order `n` are exactly `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) const UNDEFINED: u32 = u32::MAX;

/// Square lookup table for a partial binary operation.
///
/// Every cell is materialized; an undefined sum is stored as an explicit
/// sentinel. The table itself does not enforce symmetry so that asymmetric
/// input can be reported by the verifiers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialOpTable {
    order: usize,
    cells: Vec<u32>,
}

impl PartialOpTable {
    /// A table of the given order with every cell undefined.
    pub fn undefined(order: usize) -> Self {
        PartialOpTable {
            order,
            cells: vec![UNDEFINED; order * order],
        }
    }

    /// Builds a table from rows of optional results, rejecting malformed input.
    pub fn from_rows(rows: &[Vec<Option<usize>>]) -> Result<Self, InputError> {
        let order = rows.len();
        if order == 0 {
            return Err(InputError::EmptyTable);
        }
        let mut table = Self::undefined(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(InputError::NotSquare {
                    row: i,
                    len: row.len(),
                    order,
                });
            }
            for (j, cell) in row.iter().enumerate() {
                if let Some(k) = *cell {
                    if k >= order {
                        return Err(InputError::OutOfRange { index: k, order });
                    }
                    table.cells[i * order + j] = k as u32;
                }
            }
        }
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        let v = self.cells[a.index() * self.order + b.index()];
        (v != UNDEFINED).then_some(ElementId(v))
    }

    /// Sets one cell only; `set_symmetric` writes both `(a, b)` and `(b, a)`.
    pub fn set(&mut self, a: ElementId, b: ElementId, value: Option<ElementId>) {
        self.cells[a.index() * self.order + b.index()] = value.map_or(UNDEFINED, |v| v.0);
    }

    pub fn set_symmetric(&mut self, a: ElementId, b: ElementId, value: Option<ElementId>) {
        self.set(a, b, value);
        self.set(b, a, value);
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId::new)
    }

    pub fn is_symmetric(&self) -> bool {
        self.ids()
            .all(|a| self.ids().all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// Raw row-major cell values, with undefined encoded as `u32::MAX`.
    pub fn raw_cells(&self) -> &[u32] {
        &self.cells
    }

    /// Number of defined cells in row `a`.
    pub fn row_degree(&self, a: ElementId) -> usize {
        let start = a.index() * self.order;
        self.cells[start..start + self.order]
            .iter()
            .filter(|&&v| v != UNDEFINED)
            .count()
    }

    /// The table obtained by renaming every element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[ElementId]) -> PartialOpTable {
        let mut out = Self::undefined(self.order);
        for a in self.ids() {
            for b in self.ids() {
                if let Some(c) = self.get(a, b) {
                    out.set(perm[a.index()], perm[b.index()], Some(perm[c.index()]));
                }
            }
        }
        out
    }
}

impl fmt::Debug for PartialOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PartialOpTable(order {})", self.order)?;
        for a in self.ids() {
            let row: Vec<String> = self
                .ids()
                .map(|b| {
                    self.get(a, b)
                        .map_or_else(|| ".".to_string(), |c| c.to_string())
                })
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_rows() {
        let ragged = vec![vec![Some(0), None], vec![Some(1)]];
        assert!(matches!(
            PartialOpTable::from_rows(&ragged),
            Err(InputError::NotSquare { row: 1, .. })
        ));
        let out_of_range = vec![vec![Some(0), Some(2)], vec![Some(1), None]];
        assert!(matches!(
            PartialOpTable::from_rows(&out_of_range),
            Err(InputError::OutOfRange { index: 2, order: 2 })
        ));
        assert!(matches!(
            PartialOpTable::from_rows(&[]),
            Err(InputError::EmptyTable)
        ));
    }

    #[test]
    fn relabel_moves_cells_and_values() {
        let t = PartialOpTable::from_rows(&[vec![Some(0), Some(1)], vec![Some(1), None]]).unwrap();
        let swapped = t.relabel(&[ElementId(1), ElementId(0)]);
        assert_eq!(swapped.get(ElementId(1), ElementId(1)), Some(ElementId(1)));
        assert_eq!(swapped.get(ElementId(1), ElementId(0)), Some(ElementId(0)));
        assert_eq!(swapped.get(ElementId(0), ElementId(0)), None);
    }
}
