//! The ideal `J = ker λ`, generated subalgebras and ideals, and the radical
//! of the Frobenius form.

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::linalg::{rank, EchelonBasis};
use crate::scalar::Field;

/// True iff `x` lies in the codimension-one ideal `J = ker λ`.
pub fn in_j(x: &Element) -> bool {
    x.weight().is_zero()
}

/// The span reached by a closure computation.
#[derive(Clone, Debug)]
pub struct ClosureState {
    span: EchelonBasis,
    // Rows as they were when inserted. Same span as the echelon rows, but
    // never rewritten, so each sweep only multiplies the vectors found by the
    // previous one.
    found: Vec<Element>,
    frontier: usize,
    /// Number of sweeps performed.
    pub generation: usize,
    /// True iff the last sweep added nothing.
    pub stable: bool,
    /// `dims[k]` is the dimension after `k` sweeps; `dims[0]` is the span of the generators.
    pub dims: Vec<usize>,
}

impl ClosureState {
    fn start(generators: &[Element]) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let field = first.field();
        if let Some(bad) = generators.iter().find(|g| g.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        let mut state = ClosureState {
            span: EchelonBasis::new(field),
            found: Vec::new(),
            frontier: 0,
            generation: 0,
            stable: false,
            dims: Vec::new(),
        };
        state.absorb(generators.iter().cloned());
        state.dims.push(state.dim());
        Ok(state)
    }

    fn absorb(&mut self, xs: impl IntoIterator<Item = Element>) -> usize {
        let mut added = 0;
        for x in xs {
            if let Some(row) = self.span.insert(&x) {
                self.found.push(row);
                added += 1;
            }
        }
        added
    }

    fn run(
        mut self,
        max_sweeps: usize,
        products: impl Fn(&[Element], usize) -> Vec<Element>,
    ) -> Self {
        while self.generation < max_sweeps && !self.stable {
            let new = products(&self.found, self.frontier);
            self.frontier = self.found.len();
            let added = self.absorb(new);
            self.generation += 1;
            self.dims.push(self.dim());
            self.stable = added == 0;
        }
        self
    }

    pub fn field(&self) -> Field {
        self.span.field()
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Reduced row-echelon basis, ordered by pivot.
    pub fn basis(&self) -> impl Iterator<Item = &Element> {
        self.span.rows()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.span
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.span.contains(x)
    }
}

/// Closes the span of `generators` under the product, one round of pairwise
/// products per sweep, for at most `max_sweeps` sweeps.
///
/// The highwater algebra is infinite-dimensional, so `stable == false` on
/// return is an ordinary outcome.
pub fn subalgebra_closure(generators: &[Element], max_sweeps: usize) -> Result<ClosureState> {
    let state = ClosureState::start(generators)?;
    Ok(state.run(max_sweeps, |found, frontier| {
        let mut out = Vec::new();
        for j in frontier..found.len() {
            for i in 0..=j {
                out.push(&found[i] * &found[j]);
            }
        }
        out
    }))
}

/// Closes the span of `generators` under multiplication by the basis vectors
/// `a_i` (`|i| <= window`) and `σ_j` (`j <= window`).
///
/// Only the multipliers are windowed; supports of the closure grow freely.
pub fn ideal_closure(generators: &[Element], window: u64, max_sweeps: usize) -> Result<ClosureState> {
    let state = ClosureState::start(generators)?;
    let field = state.field();
    let multipliers: Vec<Element> = BasisIndex::window(window)
        .into_iter()
        .map(|b| Element::basis(b, field))
        .collect();
    Ok(state.run(max_sweeps, |found, frontier| {
        found[frontier..]
            .iter()
            .flat_map(|x| multipliers.iter().map(move |m| m * x))
            .collect()
    }))
}

/// Certifies on the window `|i| <= window`, `j <= window` that the radical of
/// the form `(x, y) = λ(x)λ(y)` is exactly `J`: a spanning set of `J` pairs to
/// zero with every basis vector, `(a_0, a_0) = 1`, and the Gram matrix has
/// rank one.
pub fn frobenius_radical_check(window: u64, field: Field) -> bool {
    let basis: Vec<Element> = BasisIndex::window(window)
        .into_iter()
        .map(|b| Element::basis(b, field))
        .collect();
    let a0 = Element::a(0, field);
    let j_span: Vec<Element> = basis
        .iter()
        .filter(|b| **b != a0)
        .map(|b| if in_j(b) { b.clone() } else { b - &a0 })
        .collect();
    let annihilates = j_span.iter().all(|x| {
        in_j(x)
            && basis
                .iter()
                .all(|y| x.frobenius(y).expect("same field").is_zero())
    });
    let normalized = a0.frobenius(&a0).expect("same field").is_one();
    let gram_rows: Vec<Element> = basis
        .iter()
        .map(|x| {
            Element::from_terms(
                field,
                BasisIndex::window(window)
                    .into_iter()
                    .zip(&basis)
                    .map(|(k, y)| (k, x.frobenius(y).expect("same field"))),
            )
        })
        .collect();
    let j_codim_one = rank(field, &j_span) == basis.len() - 1;
    annihilates && normalized && j_codim_one && rank(field, &gram_rows) == 1
}
