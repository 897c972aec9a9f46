//! Automorphisms: the infinite dihedral group acting on axis indices, and
//! the involutions `ρ`, `θ`, `ψ` of the subalgebra `V = HW_u ⊕ HW_v` at `a_0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::spectral::{decompose, Axis, Family};

/// `i ↦ t + i`, or `i ↦ t - i` when `flip` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct DihedralElement {
    pub translation: i64,
    pub flip: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement { translation: 0, flip: false };

    pub fn translate(t: i64) -> Self {
        DihedralElement { translation: t, flip: false }
    }

    /// `i ↦ t - i`.
    pub fn reflect(t: i64) -> Self {
        DihedralElement { translation: t, flip: true }
    }

    /// `τ: a_i ↦ a_{-i}`, the stabilizer of `a_0`.
    pub fn tau() -> Self {
        Self::reflect(0)
    }

    /// `π`: swaps `a_0` and `a_1`.
    pub fn pi() -> Self {
        Self::reflect(1)
    }

    pub fn act(self, i: i64) -> i64 {
        if self.flip {
            self.translation - i
        } else {
            self.translation + i
        }
    }

    pub fn inverse(self) -> Self {
        if self.flip {
            self
        } else {
            Self::translate(-self.translation)
        }
    }
}

/// `(g * h).act(i) == g.act(h.act(i))`.
impl Mul for DihedralElement {
    type Output = DihedralElement;
    fn mul(self, h: DihedralElement) -> DihedralElement {
        DihedralElement {
            translation: self.act(h.translation),
            flip: self.flip != h.flip,
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flip {
            write!(f, "i -> {} - i", self.translation)
        } else {
            write!(f, "i -> {} + i", self.translation)
        }
    }
}

/// `φ_g`: relabels `a_i` as `a_{g(i)}` and fixes every `σ_j`.
pub fn apply_dihedral(g: DihedralElement, x: &Element) -> Element {
    x.relabel_axes(|i| g.act(i))
}

/// Finite-sample certificate that a linear map is multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismCheck {
    pub pairs_checked: usize,
    /// Positions in the supplied pair list where `g(xy) != g(x) g(y)`.
    pub failures: Vec<usize>,
}

impl AutomorphismCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests `g(xy) = g(x) g(y)` on each supplied pair.
pub fn check_automorphism<G>(g: G, pairs: &[(Element, Element)]) -> AutomorphismCheck
where
    G: Fn(&Element) -> Element,
{
    let failures = pairs
        .iter()
        .enumerate()
        .filter(|(_, (x, y))| g(&(x * y)) != &g(x) * &g(y))
        .map(|(n, _)| n)
        .collect();
    AutomorphismCheck {
        pairs_checked: pairs.len(),
        failures,
    }
}

/// All unordered pairs of basis vectors `a_i` (`|i| <= window`), `σ_j` (`j <= window`).
pub fn basis_pairs(window: u64, field: Field) -> Vec<(Element, Element)> {
    let basis: Vec<Element> = BasisIndex::window(window)
        .into_iter()
        .map(|b| Element::basis(b, field))
        .collect();
    unordered_pairs(&basis)
}

pub(crate) fn unordered_pairs(xs: &[Element]) -> Vec<(Element, Element)> {
    let mut out = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i..] {
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

/// True iff `τ` fixes `x`; equivalently, the w-part of `x` at `a_0` is zero.
pub fn tau_fixed_subalgebra_check(x: &Element) -> bool {
    apply_dihedral(DihedralElement::tau(), x) == *x
}

/// An element of `V` in the basis `{c_j, σ_j}` relative to `a_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VElement {
    field: Field,
    c: BTreeMap<u64, Scalar>,
    s: BTreeMap<u64, Scalar>,
}

fn clean(map: BTreeMap<u64, Scalar>) -> BTreeMap<u64, Scalar> {
    map.into_iter().filter(|(j, c)| *j > 0 && !c.is_zero()).collect()
}

fn accumulate(map: &mut BTreeMap<u64, Scalar>, j: u64, c: Scalar) {
    let e = map.entry(j).or_insert_with(|| c.field().zero());
    *e += &c;
}

impl VElement {
    pub fn new(field: Field, c: BTreeMap<u64, Scalar>, s: BTreeMap<u64, Scalar>) -> Self {
        VElement { field, c: clean(c), s: clean(s) }
    }

    pub fn zero(field: Field) -> Self {
        Self::new(field, BTreeMap::new(), BTreeMap::new())
    }

    pub fn c(j: u64, field: Field) -> Self {
        Self::new(field, BTreeMap::from([(j, field.one())]), BTreeMap::new())
    }

    pub fn sigma(j: u64, field: Field) -> Self {
        Self::new(field, BTreeMap::new(), BTreeMap::from([(j, field.one())]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn c_coeffs(&self) -> &BTreeMap<u64, Scalar> {
        &self.c
    }

    pub fn s_coeffs(&self) -> &BTreeMap<u64, Scalar> {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty() && self.s.is_empty()
    }

    pub fn to_element(&self) -> Element {
        let mut out = Element::zero(self.field);
        for (&j, x) in &self.c {
            out.add_scaled_assign(x, &Family::C.vector(j, Axis(0), self.field));
        }
        for (&j, x) in &self.s {
            out.add_scaled_assign(x, &Element::sigma(j, self.field));
        }
        out
    }

    /// Fails unless `x` lies in `V`, i.e. has no `a`- and no w-component at `a_0`.
    pub fn from_element(x: &Element) -> Result<Self> {
        let d = decompose(x, Axis(0));
        if !d.one_coeff.is_zero() || !d.w_coeffs.is_empty() {
            return Err(Error::NotInV);
        }
        Ok(Self::from_uv(x.field(), &d.u_coeffs, &d.v_coeffs))
    }

    /// Coordinates in `{u_j, v_j}`, using `u_j = 3c_j + 4σ_j`, `v_j = c_j - 4σ_j`.
    pub fn to_uv(&self) -> (BTreeMap<u64, Scalar>, BTreeMap<u64, Scalar>) {
        let f = self.field;
        let (quarter, sixteenth, m3_16) = (f.ratio(1, 4), f.ratio(1, 16), f.ratio(-3, 16));
        let mut u = BTreeMap::new();
        let mut v = BTreeMap::new();
        for (&j, x) in &self.c {
            accumulate(&mut u, j, x * &quarter);
            accumulate(&mut v, j, x * &quarter);
        }
        for (&j, x) in &self.s {
            accumulate(&mut u, j, x * &sixteenth);
            accumulate(&mut v, j, x * &m3_16);
        }
        (clean(u), clean(v))
    }

    pub fn from_uv(field: Field, u: &BTreeMap<u64, Scalar>, v: &BTreeMap<u64, Scalar>) -> Self {
        let n = |k| Scalar::from_int(k, field);
        let mut c = BTreeMap::new();
        let mut s = BTreeMap::new();
        for (&j, x) in u {
            accumulate(&mut c, j, x * &n(3));
            accumulate(&mut s, j, x * &n(4));
        }
        for (&j, x) in v {
            accumulate(&mut c, j, x.clone());
            accumulate(&mut s, j, x * &n(-4));
        }
        Self::new(field, c, s)
    }

    /// The product in `V`, computed in the ambient algebra.
    pub fn mul(&self, other: &VElement) -> VElement {
        let p = self.to_element() * other.to_element();
        VElement::from_element(&p).expect("V is a subalgebra")
    }

    fn map_coords(&self, f: impl Fn(u64, &Scalar, &Scalar) -> (Scalar, Scalar)) -> Self {
        let zero = self.field.zero();
        let mut c = BTreeMap::new();
        let mut s = BTreeMap::new();
        let indices: std::collections::BTreeSet<u64> =
            self.c.keys().chain(self.s.keys()).copied().collect();
        for j in indices {
            let (cj, sj) = f(j, self.c.get(&j).unwrap_or(&zero), self.s.get(&j).unwrap_or(&zero));
            c.insert(j, cj);
            s.insert(j, sj);
        }
        Self::new(self.field, c, s)
    }
}

/// `ρ`: negates every `c_j`, fixes every `σ_j`.
pub fn v_rho(x: &VElement) -> VElement {
    x.map_coords(|_, c, s| (-c, s.clone()))
}

/// `θ`: fixes every `u_j`, negates every `v_j`.
pub fn v_theta(x: &VElement) -> VElement {
    let (u, v) = x.to_uv();
    let v: BTreeMap<u64, Scalar> = v.into_iter().map(|(j, c)| (j, -c)).collect();
    VElement::from_uv(x.field, &u, &v)
}

/// `ψ`: `c_j ↦ c_j/2 - 2σ_j`, `σ_j ↦ -3c_j/8 - σ_j/2`.
pub fn v_psi(x: &VElement) -> VElement {
    let f = x.field;
    let (half, m2, m3_8, mhalf) = (f.ratio(1, 2), f.ratio(-2, 1), f.ratio(-3, 8), f.ratio(-1, 2));
    x.map_coords(|_, c, s| (c * &half + s * &m3_8, c * &m2 + s * &mhalf))
}

/// Named maps accepted by [`VInvolution::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VInvolution {
    Rho,
    Theta,
    Psi,
}

impl VInvolution {
    pub fn apply(self, x: &VElement) -> VElement {
        match self {
            VInvolution::Rho => v_rho(x),
            VInvolution::Theta => v_theta(x),
            VInvolution::Psi => v_psi(x),
        }
    }
}

/// The basis `c_1, σ_1, ..., c_window, σ_window` of `V`.
pub fn v_basis(window: u64, field: Field) -> Vec<VElement> {
    (1..=window)
        .flat_map(|j| [VElement::c(j, field), VElement::sigma(j, field)])
        .collect()
}

/// Multiplicativity of a `V`-map on all basis pairs `c_i, σ_j` with indices
/// up to `window`.
pub fn check_v_automorphism(map: VInvolution, window: u64, field: Field) -> AutomorphismCheck {
    let basis = v_basis(window, field);
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            if map.apply(&x.mul(y)) != map.apply(x).mul(&map.apply(y)) {
                failures.push(pairs_checked);
            }
            pairs_checked += 1;
        }
    }
    AutomorphismCheck { pairs_checked, failures }
}

/// Smallest `n >= 1` with `g^n(x) = x`, searching up to `limit`.
pub fn orbit_order(g: impl Fn(&VElement) -> VElement, x: &VElement, limit: usize) -> Option<usize> {
    let mut y = g(x);
    for n in 1..=limit {
        if &y == x {
            return Some(n);
        }
        y = g(&y);
    }
    None
}

/// Extends a `V`-map to the ambient algebra by fixing `a_0` and acting on the
/// w-part by `w_sign` (±1), then tests multiplicativity on the eigenbasis
/// pairs up to `window`. A failing check means this extension is not an
/// automorphism; it says nothing about other extensions.
pub fn probe_extension(
    map: VInvolution,
    w_sign: i64,
    window: u64,
    field: Field,
) -> AutomorphismCheck {
    let sign = Scalar::from_int(w_sign, field);
    let extend = |x: &Element| -> Element {
        let d = decompose(x, Axis(0));
        let mut v_part = d.component(crate::spectral::EigenPart::U);
        v_part = v_part + d.component(crate::spectral::EigenPart::V);
        let image = map
            .apply(&VElement::from_element(&v_part).expect("uv-part lies in V"))
            .to_element();
        d.component(crate::spectral::EigenPart::One)
            + image
            + d.component(crate::spectral::EigenPart::W).scale(&sign)
    };
    let basis: Vec<Element> = crate::fusion::eigenbasis(Axis(0), window, field)
        .into_iter()
        .map(|b| b.vector)
        .collect();
    check_automorphism(extend, &unordered_pairs(&basis))
}
