//! The highwater algebra: basis `{a_i : i in Z} ∪ {σ_j : j >= 1}` with the
//! commutative product
//!
//! ```text
//! a_i a_j = 1/2 (a_i + a_j) + σ_|i-j|
//! a_i σ_j = -3/4 a_i + 3/8 (a_{i-j} + a_{i+j}) + 3/2 σ_j
//! σ_i σ_j = 3/4 (σ_i + σ_j) - 3/8 (σ_|i-j| + σ_{i+j})
//! ```
//!
//! where `σ_0 = 0`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A basis vector. Ordered with every `A` before every `S`, then by index.
///
/// `S(0)` is representable but denotes the zero vector; elements never
/// store it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    A(i64),
    S(u64),
}

impl BasisIndex {
    pub fn is_axis(self) -> bool {
        matches!(self, BasisIndex::A(_))
    }

    /// All `a_i` with `|i| <= window` followed by `σ_1 ..= σ_window`.
    pub fn window(window: u64) -> Vec<BasisIndex> {
        let w = window as i64;
        (-w..=w)
            .map(BasisIndex::A)
            .chain((1..=window).map(BasisIndex::S))
            .collect()
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::A(i) => write!(f, "a({i})"),
            BasisIndex::S(j) => write!(f, "s({j})"),
        }
    }
}

/// Structure constants of the product, embedded once per field.
struct ProductConstants {
    half: Scalar,
    three_quarters: Scalar,
    three_eighths: Scalar,
    three_halves: Scalar,
}

impl ProductConstants {
    fn new(field: Field) -> Self {
        ProductConstants {
            half: field.ratio(1, 2),
            three_quarters: field.ratio(3, 4),
            three_eighths: field.ratio(3, 8),
            three_halves: field.ratio(3, 2),
        }
    }

    /// Writes `coeff * (x y)` into `acc`.
    fn accumulate(&self, x: BasisIndex, y: BasisIndex, coeff: &Scalar, acc: &mut Terms) {
        use BasisIndex::{A, S};
        match (x, y) {
            (A(i), A(j)) => {
                let h = coeff * &self.half;
                acc.add(A(i), &h);
                acc.add(A(j), &h);
                acc.add(S(i.abs_diff(j)), coeff);
            }
            (A(i), S(j)) | (S(j), A(i)) => {
                if j == 0 {
                    return;
                }
                let e = coeff * &self.three_eighths;
                acc.add(A(i), &-(coeff * &self.three_quarters));
                acc.add(A(i - j as i64), &e);
                acc.add(A(i + j as i64), &e);
                acc.add(S(j), &(coeff * &self.three_halves));
            }
            (S(i), S(j)) => {
                if i == 0 || j == 0 {
                    return;
                }
                let q = coeff * &self.three_quarters;
                let e = -(coeff * &self.three_eighths);
                acc.add(S(i), &q);
                acc.add(S(j), &q);
                acc.add(S(i.abs_diff(j)), &e);
                acc.add(S(i + j), &e);
            }
        }
    }
}

/// Sparse accumulator that keeps no zero and no `σ_0` entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
struct Terms(BTreeMap<BasisIndex, Scalar>);

impl Terms {
    fn add(&mut self, idx: BasisIndex, c: &Scalar) {
        if idx == BasisIndex::S(0) || c.is_zero() {
            return;
        }
        match self.0.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

/// A finitely supported vector of the highwater algebra over a fixed field.
///
/// Always normalized: no zero coefficient and no `σ_0` term is stored, so
/// structural equality is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    field: Field,
    terms: Terms,
}

impl Element {
    pub fn zero(field: Field) -> Self {
        Element {
            field,
            terms: Terms::default(),
        }
    }

    pub fn basis(idx: BasisIndex, field: Field) -> Self {
        Self::from_terms(field, [(idx, field.one())])
    }

    /// The axis `a_i`.
    pub fn a(i: i64, field: Field) -> Self {
        Self::basis(BasisIndex::A(i), field)
    }

    /// `σ_j`; `sigma(0, _)` is the zero vector.
    pub fn sigma(j: u64, field: Field) -> Self {
        Self::basis(BasisIndex::S(j), field)
    }

    /// Builds an element from `(index, coefficient)` pairs, summing repeats.
    ///
    /// Panics if a coefficient is not in `field`.
    pub fn from_terms<I>(field: Field, terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisIndex, Scalar)>,
    {
        let mut acc = Terms::default();
        for (idx, c) in terms {
            assert_eq!(c.field(), field, "coefficient field mismatch");
            acc.add(idx, &c);
        }
        Element { field, terms: acc }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.0.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.0.len()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisIndex, &Scalar)> + '_ {
        self.terms.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, idx: BasisIndex) -> Scalar {
        self.terms
            .0
            .get(&idx)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Lowest basis index in the support.
    pub fn leading(&self) -> Option<(BasisIndex, &Scalar)> {
        self.terms.0.iter().next().map(|(k, v)| (*k, v))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Element::zero(self.field);
        }
        Element {
            field: self.field,
            terms: Terms(self.terms.0.iter().map(|(k, v)| (*k, v * c)).collect()),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &Element) -> Self {
        let mut out = self.clone();
        out.add_scaled_assign(c, other);
        out
    }

    pub fn add_scaled_assign(&mut self, c: &Scalar, other: &Element) {
        assert_eq!(self.field, other.field, "element field mismatch");
        for (k, v) in &other.terms.0 {
            self.terms.add(*k, &(c * v));
        }
    }

    fn check_field(&self, other: &Element) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_field(other)?;
        Ok(self.add_scaled(&self.field.one(), other))
    }

    /// The algebra product, bilinearly extended from the basis products.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_field(other)?;
        let consts = ProductConstants::new(self.field);
        let mut acc = Terms::default();
        for (x, cx) in &self.terms.0 {
            for (y, cy) in &other.terms.0 {
                consts.accumulate(*x, *y, &(cx * cy), &mut acc);
            }
        }
        Ok(Element {
            field: self.field,
            terms: acc,
        })
    }

    pub fn square(&self) -> Element {
        self.try_mul(self).expect("same field")
    }

    /// The weight homomorphism λ: sum of the `a`-coefficients.
    pub fn weight(&self) -> Scalar {
        let mut w = self.field.zero();
        for (k, v) in &self.terms.0 {
            if k.is_axis() {
                w += v;
            }
        }
        w
    }

    /// The Frobenius form `(x, y) = λ(x) λ(y)`.
    pub fn frobenius(&self, other: &Element) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(self.weight() * other.weight())
    }

    /// Restriction to the `a_i` terms.
    pub fn a_part(&self) -> Element {
        self.filter(|k| k.is_axis())
    }

    /// Restriction to the `σ_j` terms.
    pub fn sigma_part(&self) -> Element {
        self.filter(|k| !k.is_axis())
    }

    fn filter(&self, keep: impl Fn(BasisIndex) -> bool) -> Element {
        Element {
            field: self.field,
            terms: Terms(
                self.terms
                    .0
                    .iter()
                    .filter(|(k, _)| keep(**k))
                    .map(|(k, v)| (*k, v.clone()))
                    .collect(),
            ),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Relabels every `a_i` as `a_{f(i)}`, fixing the `σ_j`.
    pub fn relabel_axes(&self, f: impl Fn(i64) -> i64) -> Element {
        Element::from_terms(
            self.field,
            self.terms().map(|(k, v)| match k {
                BasisIndex::A(i) => (BasisIndex::A(f(i)), v.clone()),
                s => (s, v.clone()),
            }),
        )
    }

    /// Applies the linear map determined by `image` on basis vectors.
    pub fn map_linear(&self, image: impl Fn(BasisIndex) -> Element) -> Element {
        let mut out = Element::zero(self.field);
        for (k, v) in self.terms() {
            out.add_scaled_assign(v, &image(k));
        }
        out
    }

    /// Largest `|i|` over `a_i` terms and largest `j` over `σ_j` terms.
    pub fn extent(&self) -> (u64, u64) {
        let mut ext = (0, 0);
        for (k, _) in self.terms() {
            match k {
                BasisIndex::A(i) => ext.0 = ext.0.max(i.unsigned_abs()),
                BasisIndex::S(j) => ext.1 = ext.1.max(j),
            }
        }
        ext
    }
}

/// The product of two basis vectors.
pub fn basis_product(x: BasisIndex, y: BasisIndex, field: Field) -> Element {
    let mut acc = Terms::default();
    ProductConstants::new(field).accumulate(x, y, &field.one(), &mut acc);
    Element { field, terms: acc }
}

impl fmt::Display for Element {
    /// Canonical text form, e.g. `1/2*a(0) + 1/2*a(1) + s(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{}*", magnitude.coefficient_text())?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

macro_rules! element_op {
    ($trait:ident, $method:ident, |$l:ident, $r:ident| $body:expr) => {
        impl $trait<&Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                let ($l, $r) = (self, rhs);
                $body
            }
        }
        impl $trait<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                let ($l, $r) = (&self, &rhs);
                $body
            }
        }
        impl $trait<&Element> for Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                let ($l, $r) = (&self, rhs);
                $body
            }
        }
        impl $trait<Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                let ($l, $r) = (self, &rhs);
                $body
            }
        }
    };
}

// Operators panic on a field mismatch; `try_add`/`try_mul` report it instead.
element_op!(Add, add, |l, r| l.try_add(r).expect("element field mismatch"));
element_op!(Sub, sub, |l, r| l.add_scaled(&-l.field.one(), r));
element_op!(Mul, mul, |l, r| l.try_mul(r).expect("element field mismatch"));

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Mul<Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(&self)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-self.field.one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}
