//! Characteristic 3: the degenerate product, the Jordan identity, and the
//! baric construction `B = A ⊕ I` with `BI = 0` and
//! `ab = (ω(b)a + ω(a)b)/2 + σ(a, b)` on `A`.

use rand::Rng;

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::sampling;
use crate::scalar::{Field, Scalar};
use crate::spectral::Family;
use crate::spectral::Axis;

fn require_char3(field: Field) -> Result<()> {
    if field.is_char3() {
        Ok(())
    } else {
        Err(Error::RequiresCharacteristicThree(field))
    }
}

/// True iff `σ_j b = 0` for all `j <= window` and all basis `b` in the window.
pub fn char3_sigma_annihilation_check(window: u64, field: Field) -> Result<bool> {
    require_char3(field)?;
    let basis = BasisIndex::window(window);
    Ok((1..=window).all(|j| {
        let s = Element::sigma(j, field);
        basis
            .iter()
            .all(|&b| (&s * &Element::basis(b, field)).is_zero())
    }))
}

/// `u_|i-j|/2 - u_{i+j}/2` at `a_0`, with `u_0 = 0`.
pub fn w_product_formula(i: u64, j: u64, field: Field) -> Element {
    let half = field.ratio(1, 2);
    let u = |k| Family::U.vector(k, Axis(0), field);
    (u(i.abs_diff(j)) - u(i + j)).scale(&half)
}

/// `w_i w_j` at `a_0`, checked against [`w_product_formula`].
pub fn char3_w_product(i: u64, j: u64, field: Field) -> Result<Element> {
    require_char3(field)?;
    if i == 0 || j == 0 {
        return Err(Error::ZeroIndex(0));
    }
    let w = |k| Family::W.vector(k, Axis(0), field);
    let p = w(i) * w(j);
    if p != w_product_formula(i, j, field) {
        return Err(Error::IdentityViolated(format!("w_{i} w_{j} = {p}")));
    }
    Ok(p)
}

/// `v_i w_j` at `a_0`, which vanishes in characteristic 3.
pub fn char3_vw_product(i: u64, j: u64, field: Field) -> Result<Element> {
    require_char3(field)?;
    if i == 0 || j == 0 {
        return Err(Error::ZeroIndex(0));
    }
    let p = Family::V.vector(i, Axis(0), field) * Family::W.vector(j, Axis(0), field);
    if !p.is_zero() {
        return Err(Error::IdentityViolated(format!("v_{i} w_{j} = {p}")));
    }
    Ok(p)
}

/// For `x`, `y` with no σ-part: `a(xy) = λ(y)/2 · x + λ(x)/2 · y`.
pub fn a_part_product_check(x: &Element, y: &Element) -> Result<bool> {
    if !x.sigma_part().is_zero() || !y.sigma_part().is_zero() {
        return Err(Error::HasSigmaPart);
    }
    let field = x.field();
    let half = field.ratio(1, 2);
    let lhs = x.try_mul(y)?.a_part();
    let rhs = x.scale(&(y.weight() * &half)) + y.scale(&(x.weight() * &half));
    Ok(lhs == rhs)
}

/// `x(y x²) = (x y) x²`.
pub fn jordan_identity_check(x: &Element, y: &Element) -> Result<bool> {
    let x2 = x.try_mul(x)?;
    let lhs = x.try_mul(&y.try_mul(&x2)?)?;
    let rhs = x.try_mul(y)?.try_mul(&x2)?;
    Ok(lhs == rhs)
}

/// Data for the baric construction: a weight `omega` on `A` and a symmetric
/// bilinear `sigma_form: A × A -> I`, given on basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaricAlgebraSpec {
    pub field: Field,
    pub dim_a: usize,
    pub dim_i: usize,
    pub omega: Vec<Scalar>,
    /// `sigma_form[p][q]` is the `I`-vector `σ(e_p, e_q)`.
    pub sigma_form: Vec<Vec<Vec<Scalar>>>,
}

impl BaricAlgebraSpec {
    pub fn validate(&self) -> Result<()> {
        if self.field.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if self.dim_a == 0 {
            return Err(Error::MalformedBaricSpec("A must be nonzero".into()));
        }
        if self.omega.len() != self.dim_a {
            return Err(Error::MalformedBaricSpec("omega has the wrong length".into()));
        }
        if self.sigma_form.len() != self.dim_a
            || self.sigma_form.iter().any(|row| {
                row.len() != self.dim_a || row.iter().any(|v| v.len() != self.dim_i)
            })
        {
            return Err(Error::MalformedBaricSpec("sigma_form has the wrong shape".into()));
        }
        let scalars = self
            .omega
            .iter()
            .chain(self.sigma_form.iter().flatten().flatten());
        if scalars.clone().any(|s| s.field() != self.field) {
            return Err(Error::MalformedBaricSpec("coefficient outside the field".into()));
        }
        for p in 0..self.dim_a {
            for q in 0..p {
                if self.sigma_form[p][q] != self.sigma_form[q][p] {
                    return Err(Error::AsymmetricSigmaForm(p, q));
                }
            }
        }
        Ok(())
    }

    /// Random weight and symmetric form with small entries.
    pub fn random(dim_a: usize, dim_i: usize, field: Field, rng: &mut impl Rng) -> Self {
        let omega = (0..dim_a).map(|_| sampling::scalar(rng, field)).collect();
        let mut sigma_form = vec![vec![vec![]; dim_a]; dim_a];
        for p in 0..dim_a {
            for q in p..dim_a {
                let v: Vec<Scalar> = (0..dim_i).map(|_| sampling::scalar(rng, field)).collect();
                sigma_form[p][q] = v.clone();
                sigma_form[q][p] = v;
            }
        }
        BaricAlgebraSpec { field, dim_a, dim_i, omega, sigma_form }
    }

    /// The characteristic-3 highwater algebra on `A = <a_i : |i| <= a_window>`,
    /// `I = <σ_j : j <= 2 a_window>`, with `ω = λ` and `σ(a_i, a_k) = σ_|i-k|`.
    pub fn highwater_window(a_window: u64, field: Field) -> Self {
        let dim_a = 2 * a_window as usize + 1;
        let dim_i = 2 * a_window as usize;
        let idx = |p: usize| p as i64 - a_window as i64;
        let mut sigma_form = vec![vec![vec![field.zero(); dim_i]; dim_a]; dim_a];
        for (p, row) in sigma_form.iter_mut().enumerate() {
            for (q, v) in row.iter_mut().enumerate() {
                let d = idx(p).abs_diff(idx(q)) as usize;
                if d > 0 {
                    v[d - 1] = field.one();
                }
            }
        }
        BaricAlgebraSpec {
            field,
            dim_a,
            dim_i,
            omega: vec![field.one(); dim_a],
            sigma_form,
        }
    }
}

/// Basis order of [`BaricAlgebraSpec::highwater_window`]: `a_{-w} .. a_w`, then `σ_1 .. σ_{2w}`.
pub fn highwater_window_basis(a_window: u64) -> Vec<BasisIndex> {
    let w = a_window as i64;
    (-w..=w)
        .map(BasisIndex::A)
        .chain((1..=2 * a_window).map(BasisIndex::S))
        .collect()
}

/// A finite-dimensional commutative algebra stored as a dense structure tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaricAlgebra {
    field: Field,
    dim_a: usize,
    dim_i: usize,
    omega: Vec<Scalar>,
    // e_p e_q = Σ_r table[p][q][r] e_r
    table: Vec<Vec<Vec<Scalar>>>,
}

/// Builds `B = A ⊕ I` from `spec`.
pub fn baric_jordan_build(spec: &BaricAlgebraSpec) -> Result<BaricAlgebra> {
    spec.validate()?;
    let field = spec.field;
    let n = spec.dim_a + spec.dim_i;
    let half = field.ratio(1, 2);
    let mut table = vec![vec![vec![field.zero(); n]; n]; n];
    for p in 0..spec.dim_a {
        for q in 0..spec.dim_a {
            let cell = &mut table[p][q];
            cell[p] += &(&half * &spec.omega[q]);
            cell[q] += &(&half * &spec.omega[p]);
            for (r, s) in spec.sigma_form[p][q].iter().enumerate() {
                cell[spec.dim_a + r] += s;
            }
        }
    }
    let mut omega = spec.omega.clone();
    omega.resize(n, field.zero());
    Ok(BaricAlgebra {
        field,
        dim_a: spec.dim_a,
        dim_i: spec.dim_i,
        omega,
        table,
    })
}

impl BaricAlgebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim_a + self.dim_i
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Scalar> {
        (0..self.dim())
            .map(|r| if r == k { self.field.one() } else { self.field.zero() })
            .collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, yq) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xp * yq;
                for (r, t) in self.table[p][q].iter().enumerate() {
                    if !t.is_zero() {
                        out[r] += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// The extended weight: `ω` on `A`, zero on `I`.
    pub fn weight(&self, x: &[Scalar]) -> Scalar {
        x.iter()
            .zip(&self.omega)
            .fold(self.field.zero(), |acc, (c, w)| acc + c * w)
    }

    pub fn random_vector(&self, rng: &mut impl Rng) -> Vec<Scalar> {
        (0..self.dim()).map(|_| sampling::scalar(rng, self.field)).collect()
    }

    /// Commutativity and `I B = 0` on basis pairs.
    pub fn check_ideal_annihilates(&self) -> bool {
        let n = self.dim();
        (0..n).all(|p| {
            (0..n).all(|q| {
                let prod = &self.table[p][q];
                prod == &self.table[q][p] && (p < self.dim_a && q < self.dim_a || prod.iter().all(Scalar::is_zero))
            })
        })
    }

    /// `ab - (ω(b)a + ω(a)b)/2 ∈ I` for basis `a, b` of `A`, and `I` is an ideal.
    pub fn check_condition_c(&self) -> bool {
        let half = self.field.ratio(1, 2);
        (0..self.dim_a).all(|p| {
            (0..self.dim_a).all(|q| {
                let mut d = self.table[p][q].clone();
                d[p] = &d[p] - &(&half * &self.omega[q]);
                d[q] = &d[q] - &(&half * &self.omega[p]);
                d[..self.dim_a].iter().all(Scalar::is_zero)
            })
        })
    }

    /// `ω(xy) = ω(x) ω(y)` on basis pairs.
    pub fn check_weight_homomorphism(&self) -> bool {
        let n = self.dim();
        (0..n).all(|p| {
            (0..n).all(|q| {
                self.weight(&self.table[p][q]) == &self.omega[p] * &self.omega[q]
            })
        })
    }

    pub fn jordan_identity(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        let x2 = self.mul(x, x);
        self.mul(x, &self.mul(y, &x2)) == self.mul(&self.mul(x, y), &x2)
    }
}
