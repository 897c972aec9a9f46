//! Eigenvectors of the adjoint map of an axis and the decomposition
//! `HW = <a> ⊕ HW_u ⊕ HW_v ⊕ HW_w`.
//!
//! Relative to the axis `a = a_k` and `j >= 1`:
//!
//! ```text
//! c_j = 2a - (a_{k-j} + a_{k+j})
//! u_j = 6a - 3(a_{k-j} + a_{k+j}) + 4σ_j = 3c_j + 4σ_j     (eigenvalue 0)
//! v_j = 2a - (a_{k-j} + a_{k+j}) - 4σ_j =  c_j - 4σ_j     (eigenvalue 2)
//! w_j = a_{k-j} - a_{k+j}                                  (eigenvalue 1/2)
//! ```
//!
//! In characteristic 3, `2 = 1/2` and the v- and w-parts share an eigenspace;
//! the coordinates stay the same.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::poly::{characteristic_polynomial, Polynomial};
use crate::scalar::{Field, Scalar};

/// The axis `a_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Axis(pub i64);

impl Axis {
    pub fn element(self, field: Field) -> Element {
        Element::a(self.0, field)
    }

    fn pair(self, j: u64) -> (BasisIndex, BasisIndex) {
        (
            BasisIndex::A(self.0 - j as i64),
            BasisIndex::A(self.0 + j as i64),
        )
    }
}

/// The families of vectors indexed by `j >= 1` relative to an axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    C,
    U,
    V,
    W,
    Sigma,
}

impl Family {
    /// The `j`-th vector of the family; index 0 gives the zero vector.
    pub fn vector(self, j: u64, axis: Axis, field: Field) -> Element {
        if j == 0 {
            return Element::zero(field);
        }
        let (lo, hi) = axis.pair(j);
        let a = BasisIndex::A(axis.0);
        let s = BasisIndex::S(j);
        let n = |k: i64| Scalar::from_int(k, field);
        let terms = match self {
            Family::C => vec![(a, n(2)), (lo, n(-1)), (hi, n(-1))],
            Family::U => vec![(a, n(6)), (lo, n(-3)), (hi, n(-3)), (s, n(4))],
            Family::V => vec![(a, n(2)), (lo, n(-1)), (hi, n(-1)), (s, n(-4))],
            Family::W => vec![(lo, n(1)), (hi, n(-1))],
            Family::Sigma => vec![(s, n(1))],
        };
        Element::from_terms(field, terms)
    }

    /// `x_{i,j} = -2x_i - 2x_j + x_|i-j| + x_{i+j}`, with `x_0 = 0`.
    pub fn pair_combination(self, i: u64, j: u64, axis: Axis, field: Field) -> Element {
        let x = |k| self.vector(k, axis, field);
        let minus_two = Scalar::from_int(-2, field);
        let mut out = x(i.abs_diff(j)) + x(i + j);
        out.add_scaled_assign(&minus_two, &x(i));
        out.add_scaled_assign(&minus_two, &x(j));
        out
    }
}

fn checked(j: u64) -> Result<u64> {
    if j == 0 {
        Err(Error::ZeroIndex(j))
    } else {
        Ok(j)
    }
}

pub fn c_vec(j: u64, axis: Axis, field: Field) -> Result<Element> {
    Ok(Family::C.vector(checked(j)?, axis, field))
}

pub fn u_vec(j: u64, axis: Axis, field: Field) -> Result<Element> {
    Ok(Family::U.vector(checked(j)?, axis, field))
}

pub fn v_vec(j: u64, axis: Axis, field: Field) -> Result<Element> {
    Ok(Family::V.vector(checked(j)?, axis, field))
}

pub fn w_vec(j: u64, axis: Axis, field: Field) -> Result<Element> {
    Ok(Family::W.vector(checked(j)?, axis, field))
}

/// Matrix of `ad_{a_0}` on `<a_0, a_{-j}, a_j, σ_j>`. Row `r` holds the
/// coordinates of `a_0 · b_r` for the ordered basis `b = (a_0, a_{-j}, a_j, σ_j)`.
pub fn ad_matrix_4(j: u64, field: Field) -> Result<Vec<Vec<Scalar>>> {
    let j = checked(j)?;
    let basis = [
        BasisIndex::A(0),
        BasisIndex::A(-(j as i64)),
        BasisIndex::A(j as i64),
        BasisIndex::S(j),
    ];
    let a = Element::a(0, field);
    Ok(basis
        .iter()
        .map(|&b| {
            let image = &a * &Element::basis(b, field);
            debug_assert!(image.terms().all(|(k, _)| basis.contains(&k)));
            basis.iter().map(|&k| image.coeff(k)).collect()
        })
        .collect())
}

pub fn char_poly_ad4(j: u64, field: Field) -> Result<Polynomial> {
    Ok(characteristic_polynomial(&ad_matrix_4(j, field)?, field))
}

/// `(x - 1) x (x - 2) (x - 1/2)`.
pub fn expected_spectrum_polynomial(field: Field) -> Polynomial {
    Polynomial::from_roots(field, &[field.one(), field.zero(), field.ratio(2, 1), field.ratio(1, 2)])
}

/// One summand of the axial decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EigenPart {
    One,
    U,
    V,
    W,
}

impl EigenPart {
    pub const ALL: [EigenPart; 4] = [EigenPart::One, EigenPart::U, EigenPart::V, EigenPart::W];

    /// Eigenvalue of `ad_a` on this part: 1, 0, 2, 1/2. In characteristic 3
    /// the V label equals the W label.
    pub fn eigenvalue(self, field: Field) -> Scalar {
        match self {
            EigenPart::One => field.one(),
            EigenPart::U => field.zero(),
            EigenPart::V => field.ratio(2, 1),
            EigenPart::W => field.ratio(1, 2),
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            EigenPart::One => None,
            EigenPart::U => Some(Family::U),
            EigenPart::V => Some(Family::V),
            EigenPart::W => Some(Family::W),
        }
    }
}

impl fmt::Display for EigenPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EigenPart::One => "a",
            EigenPart::U => "u",
            EigenPart::V => "v",
            EigenPart::W => "w",
        })
    }
}

/// Coordinates of an element in the basis `{a} ∪ {u_j, v_j, w_j}` of an axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub field: Field,
    pub axis: Axis,
    pub one_coeff: Scalar,
    pub u_coeffs: BTreeMap<u64, Scalar>,
    pub v_coeffs: BTreeMap<u64, Scalar>,
    pub w_coeffs: BTreeMap<u64, Scalar>,
}

impl EigenDecomposition {
    pub fn coeffs(&self, part: EigenPart) -> Option<&BTreeMap<u64, Scalar>> {
        match part {
            EigenPart::One => None,
            EigenPart::U => Some(&self.u_coeffs),
            EigenPart::V => Some(&self.v_coeffs),
            EigenPart::W => Some(&self.w_coeffs),
        }
    }

    /// The summand of the decomposition lying in `part`, as an element.
    pub fn component(&self, part: EigenPart) -> Element {
        match (part.family(), self.coeffs(part)) {
            (Some(fam), Some(coeffs)) => {
                let mut out = Element::zero(self.field);
                for (&j, c) in coeffs {
                    out.add_scaled_assign(c, &fam.vector(j, self.axis, self.field));
                }
                out
            }
            _ => self.axis.element(self.field).scale(&self.one_coeff),
        }
    }

    pub fn is_part_zero(&self, part: EigenPart) -> bool {
        match self.coeffs(part) {
            Some(c) => c.is_empty(),
            None => self.one_coeff.is_zero(),
        }
    }

    /// Parts with a nonzero summand.
    pub fn nonzero_parts(&self) -> Vec<EigenPart> {
        EigenPart::ALL
            .into_iter()
            .filter(|p| !self.is_part_zero(*p))
            .collect()
    }

    pub fn reassemble(&self) -> Element {
        let mut out = Element::zero(self.field);
        for p in EigenPart::ALL {
            out = out + self.component(p);
        }
        out
    }
}

fn bump(map: &mut BTreeMap<u64, Scalar>, j: u64, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(j).or_insert_with(|| c.field().zero());
    *entry += c;
    if entry.is_zero() {
        map.remove(&j);
    }
}

/// Decomposes `x` relative to `axis` by an exact change of basis.
///
/// `a_{k∓j} = a - c_j/2 ± w_j/2`, then `(c_j, σ_j)` is converted with
/// `c_j = (u_j + v_j)/4` and `σ_j = (u_j - 3v_j)/16`.
pub fn decompose(x: &Element, axis: Axis) -> EigenDecomposition {
    let field = x.field();
    let half = field.ratio(1, 2);
    let mut one_coeff = field.zero();
    let mut c_coeffs = BTreeMap::new();
    let mut s_coeffs = BTreeMap::new();
    let mut w_coeffs = BTreeMap::new();
    for (idx, r) in x.terms() {
        match idx {
            BasisIndex::A(i) if i == axis.0 => one_coeff += r,
            BasisIndex::A(i) => {
                let d = i - axis.0;
                let j = d.unsigned_abs();
                one_coeff += r;
                bump(&mut c_coeffs, j, &-(r * &half));
                let w = r * &half;
                bump(&mut w_coeffs, j, &if d < 0 { w } else { -w });
            }
            BasisIndex::S(j) => bump(&mut s_coeffs, j, r),
        }
    }
    let quarter = field.ratio(1, 4);
    let sixteenth = field.ratio(1, 16);
    let minus_three_sixteenths = field.ratio(-3, 16);
    let mut u_coeffs = BTreeMap::new();
    let mut v_coeffs = BTreeMap::new();
    for (j, c) in &c_coeffs {
        let cq = c * &quarter;
        bump(&mut u_coeffs, *j, &cq);
        bump(&mut v_coeffs, *j, &cq);
    }
    for (j, s) in &s_coeffs {
        bump(&mut u_coeffs, *j, &(s * &sixteenth));
        bump(&mut v_coeffs, *j, &(s * &minus_three_sixteenths));
    }
    EigenDecomposition {
        field,
        axis,
        one_coeff,
        u_coeffs,
        v_coeffs,
        w_coeffs,
    }
}

/// True iff `a_axis · x = lam · x`.
pub fn eigen_check(x: &Element, axis: Axis, lam: &Scalar) -> bool {
    let field = x.field();
    if lam.field() != field {
        return false;
    }
    axis.element(field) * x == x.scale(lam)
}
