//! Exact reduced row-echelon bases of subspaces of the algebra.
//!
//! Rows are sparse [`Element`]s. Each row has a pivot at its lowest basis
//! index with coefficient 1, and no other row has a nonzero entry in that
//! column.

use std::collections::BTreeMap;

use crate::algebra::{BasisIndex, Element};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    field: Field,
    rows: BTreeMap<BasisIndex, Element>,
}

impl EchelonBasis {
    pub fn new(field: Field) -> Self {
        EchelonBasis {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Element> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        self.rows.keys().copied()
    }

    /// `x` minus its projection onto the span along the pivot columns.
    pub fn reduce(&self, x: &Element) -> Element {
        assert_eq!(x.field(), self.field, "element field mismatch");
        let mut out = x.clone();
        // Rows are fully reduced, so each pivot of x is cleared exactly once.
        for (idx, c) in x.terms() {
            if let Some(row) = self.rows.get(&idx) {
                out.add_scaled_assign(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.reduce(x).is_zero()
    }

    /// Adds `x` to the span. Returns the new normalized row if `x` was
    /// independent, `None` otherwise.
    pub fn insert(&mut self, x: &Element) -> Option<Element> {
        let r = self.reduce(x);
        let (pivot, lead) = r.leading()?;
        let inv = lead.inverse().expect("leading coefficient is nonzero");
        let row = r.scale(&inv);
        for other in self.rows.values_mut() {
            let c = other.coeff(pivot);
            if !c.is_zero() {
                other.add_scaled_assign(&-c, &row);
            }
        }
        self.rows.insert(pivot, row.clone());
        Some(row)
    }

    /// Inserts every element, returning how many were independent.
    pub fn extend<'a>(&mut self, xs: impl IntoIterator<Item = &'a Element>) -> usize {
        xs.into_iter().filter(|x| self.insert(x).is_some()).count()
    }

    pub fn from_elements<'a>(field: Field, xs: impl IntoIterator<Item = &'a Element>) -> Self {
        let mut b = Self::new(field);
        b.extend(xs);
        b
    }
}

/// Dimension of the span of `xs`.
pub fn rank<'a>(field: Field, xs: impl IntoIterator<Item = &'a Element>) -> usize {
    EchelonBasis::from_elements(field, xs).dim()
}
