//! Seeded random scalars and elements for property checks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasisIndex, Element};
use crate::scalar::{Field, Scalar};

/// The generator used by every seeded check in the crate.
pub type CheckRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CheckRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random scalar. Rationals are `n/d` with `|n| <= 6`, `1 <= d <= 4`;
/// prime-field scalars are uniform.
pub fn scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field.characteristic() {
        0 => field.ratio(rng.random_range(-6..=6), rng.random_range(1..=4)),
        p => Scalar::from_int(rng.random_range(0..p) as i64, field),
    }
}

pub fn nonzero_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let s = scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random element with at most `max_support` terms drawn from `a_i`,
/// `|i| <= window`, and `σ_j`, `1 <= j <= window`.
pub fn element(rng: &mut impl Rng, field: Field, max_support: usize, window: u64) -> Element {
    let basis = BasisIndex::window(window);
    let n = rng.random_range(1..=max_support.max(1));
    Element::from_terms(
        field,
        (0..n).map(|_| (*basis.choose(rng).expect("nonempty window"), nonzero_scalar(rng, field))),
    )
}

/// Like [`element`], restricted to `a_i` terms.
pub fn a_element(rng: &mut impl Rng, field: Field, max_support: usize, window: u64) -> Element {
    let w = window as i64;
    let n = rng.random_range(1..=max_support.max(1));
    Element::from_terms(
        field,
        (0..n).map(|_| (BasisIndex::A(rng.random_range(-w..=w)), nonzero_scalar(rng, field))),
    )
}

/// A random element of weight zero.
pub fn weight_zero_element(rng: &mut impl Rng, field: Field, max_support: usize, window: u64) -> Element {
    let x = element(rng, field, max_support, window);
    let w = x.weight();
    x.add_scaled(&-w, &Element::a(0, field))
}
