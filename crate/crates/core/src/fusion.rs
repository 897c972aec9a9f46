//! Fusion laws and their verification on the eigenbasis of an axis.

use std::fmt;

use rand::Rng;

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::sampling;
use crate::scalar::{Field, Scalar};
use crate::spectral::{decompose, eigen_check, Axis, EigenDecomposition, EigenPart};

/// A symmetric table `S × S -> 2^S` over a finite spectrum containing 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLaw {
    name: String,
    spectrum: Vec<Scalar>,
    // table[i][k]: sorted spectrum positions
    table: Vec<Vec<Vec<usize>>>,
}

impl FusionLaw {
    /// `table[i][k]` lists positions in `spectrum` allowed in the product of
    /// eigenvectors for `spectrum[i]` and `spectrum[k]`.
    pub fn new(
        name: impl Into<String>,
        spectrum: Vec<Scalar>,
        table: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = spectrum.len();
        let field = spectrum
            .first()
            .map(Scalar::field)
            .ok_or_else(|| Error::MalformedLaw("empty spectrum".into()))?;
        if spectrum.iter().any(|s| s.field() != field) {
            return Err(Error::MalformedLaw("spectrum mixes fields".into()));
        }
        for i in 0..n {
            if spectrum[i + 1..].contains(&spectrum[i]) {
                return Err(Error::MalformedLaw(format!("repeated eigenvalue {}", spectrum[i])));
            }
        }
        if !spectrum.contains(&field.one()) {
            return Err(Error::MalformedLaw("1 is not in the spectrum".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedLaw("table is not square over the spectrum".into()));
        }
        let mut table = table;
        for row in &mut table {
            for cell in row {
                cell.sort_unstable();
                cell.dedup();
                if cell.iter().any(|&k| k >= n) {
                    return Err(Error::MalformedLaw("cell refers outside the spectrum".into()));
                }
            }
        }
        for i in 0..n {
            for k in 0..i {
                if table[i][k] != table[k][i] {
                    return Err(Error::MalformedLaw(format!(
                        "table is not symmetric at ({}, {})",
                        spectrum[i], spectrum[k]
                    )));
                }
            }
        }
        Ok(FusionLaw {
            name: name.into(),
            spectrum,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.spectrum[0].field()
    }

    pub fn spectrum(&self) -> &[Scalar] {
        &self.spectrum
    }

    pub fn position(&self, lam: &Scalar) -> Option<usize> {
        self.spectrum.iter().position(|s| s == lam)
    }

    fn require(&self, lam: &Scalar) -> Result<usize> {
        self.position(lam).ok_or_else(|| Error::NotInSpectrum {
            value: lam.to_string(),
        })
    }

    /// `lam ⋆ mu`.
    pub fn cell(&self, lam: &Scalar, mu: &Scalar) -> Result<Vec<Scalar>> {
        let (i, k) = (self.require(lam)?, self.require(mu)?);
        Ok(self.table[i][k].iter().map(|&d| self.spectrum[d].clone()).collect())
    }

    pub fn allows(&self, lam: &Scalar, mu: &Scalar, delta: &Scalar) -> Result<bool> {
        Ok(self.cell(lam, mu)?.contains(delta))
    }

    /// Replaces one cell (and its mirror).
    pub fn with_cell(mut self, lam: &Scalar, mu: &Scalar, allowed: &[Scalar]) -> Result<Self> {
        let (i, k) = (self.require(lam)?, self.require(mu)?);
        let mut cell = allowed
            .iter()
            .map(|d| self.require(d))
            .collect::<Result<Vec<_>>>()?;
        cell.sort_unstable();
        cell.dedup();
        self.table[i][k] = cell.clone();
        self.table[k][i] = cell;
        Ok(self)
    }
}

impl fmt::Display for FusionLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for (i, lam) in self.spectrum.iter().enumerate() {
            let cells: Vec<String> = self.table[i]
                .iter()
                .map(|cell| {
                    let items: Vec<String> =
                        cell.iter().map(|&d| self.spectrum[d].coefficient_text()).collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            writeln!(f, "  {:>4} | {}", lam.coefficient_text(), cells.join(" "))?;
        }
        Ok(())
    }
}

/// The Monster type law `M(alpha, beta)` over the spectrum `(1, 0, alpha, beta)`.
pub fn monster_law(alpha: &Scalar, beta: &Scalar) -> Result<FusionLaw> {
    let field = alpha.field();
    alpha.check_field(beta)?;
    let (zero, one) = (field.zero(), field.one());
    for (name, p) in [("alpha", alpha), ("beta", beta)] {
        if *p == zero || *p == one {
            return Err(Error::InvalidLawParameters(format!("{name} must not be 0 or 1")));
        }
    }
    if alpha == beta {
        return Err(Error::InvalidLawParameters("alpha must differ from beta".into()));
    }
    // positions: 0 -> 1, 1 -> 0, 2 -> alpha, 3 -> beta
    let table = vec![
        vec![vec![0], vec![], vec![2], vec![3]],
        vec![vec![], vec![1], vec![2], vec![3]],
        vec![vec![2], vec![2], vec![0, 1], vec![3]],
        vec![vec![3], vec![3], vec![3], vec![0, 1, 2]],
    ];
    FusionLaw::new(
        format!("M({}, {})", alpha.coefficient_text(), beta.coefficient_text()),
        vec![one, zero, alpha.clone(), beta.clone()],
        table,
    )
}

/// The fusion law satisfied by every axis of the highwater algebra over
/// `field`: four eigenvalues `(1, 0, 2, 1/2)` away from characteristic 3,
/// three eigenvalues `(1, 0, 1/2)` in characteristic 3.
pub fn hw_law(field: Field) -> FusionLaw {
    let (zero, one, half) = (field.zero(), field.one(), field.ratio(1, 2));
    if field.is_char3() {
        let table = vec![
            vec![vec![0], vec![], vec![2]],
            vec![vec![], vec![], vec![2]],
            vec![vec![2], vec![2], vec![1]],
        ];
        FusionLaw::new("HW (char 3)", vec![one, zero, half], table)
    } else {
        let table = vec![
            vec![vec![0], vec![], vec![2], vec![3]],
            vec![vec![], vec![1], vec![2], vec![3]],
            vec![vec![2], vec![2], vec![1], vec![3]],
            vec![vec![3], vec![3], vec![3], vec![1, 2]],
        ];
        FusionLaw::new("HW", vec![one, zero, field.ratio(2, 1), half], table)
    }
    .expect("built-in law is well formed")
}

/// Outcome of one fusion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub product: Element,
    pub decomposition: EigenDecomposition,
    /// Nonzero parts of the product whose eigenvalue is not allowed.
    pub offending: Vec<(EigenPart, Scalar)>,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Checks that `x y` decomposes into eigenvectors allowed by `lam ⋆ mu`.
///
/// `x` and `y` must be eigenvectors of the axis for `lam` and `mu`.
pub fn check_fusion_pair(
    x: &Element,
    lam: &Scalar,
    y: &Element,
    mu: &Scalar,
    axis: Axis,
    law: &FusionLaw,
) -> Result<PairCheck> {
    if !eigen_check(x, axis, lam) {
        return Err(Error::NotAnEigenvector { which: "left", eigenvalue: lam.to_string() });
    }
    if !eigen_check(y, axis, mu) {
        return Err(Error::NotAnEigenvector { which: "right", eigenvalue: mu.to_string() });
    }
    let allowed = law.cell(lam, mu)?;
    let product = x.try_mul(y)?;
    let decomposition = decompose(&product, axis);
    let field = product.field();
    let offending = decomposition
        .nonzero_parts()
        .into_iter()
        .map(|p| (p, p.eigenvalue(field)))
        .filter(|(_, ev)| !allowed.contains(ev))
        .collect();
    Ok(PairCheck {
        product,
        decomposition,
        offending,
    })
}

/// A labelled eigenbasis vector: `a`, `u3`, `v1`, `w8`, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenbasisVector {
    pub part: EigenPart,
    pub index: u64,
    pub vector: Element,
    pub eigenvalue: Scalar,
}

impl EigenbasisVector {
    pub fn label(&self) -> String {
        match self.part {
            EigenPart::One => "a".to_string(),
            p => format!("{p}{}", self.index),
        }
    }
}

/// `a` followed by `u_j, v_j, w_j` for `j = 1..=window`.
pub fn eigenbasis(axis: Axis, window: u64, field: Field) -> Vec<EigenbasisVector> {
    let mut out = vec![EigenbasisVector {
        part: EigenPart::One,
        index: 0,
        vector: axis.element(field),
        eigenvalue: field.one(),
    }];
    for j in 1..=window {
        for part in [EigenPart::U, EigenPart::V, EigenPart::W] {
            let fam = part.family().expect("non-axis part");
            out.push(EigenbasisVector {
                part,
                index: j,
                vector: fam.vector(j, axis, field),
                eigenvalue: part.eigenvalue(field),
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEntry {
    pub left: String,
    pub right: String,
    pub check: PairCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivityCheck {
    /// Dimension of the space spanned by `a_k`, `a_{k±j}`, `σ_j` (`j <= window`).
    pub ambient_dim: usize,
    /// Dimension of the 1-eigenspace of `ad_a` inside it.
    pub one_eigenspace_dim: usize,
}

impl PrimitivityCheck {
    pub fn passed(&self) -> bool {
        self.one_eigenspace_dim == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionReport {
    pub axis: Axis,
    pub window: u64,
    pub field: Field,
    pub law: String,
    pub pairs: Vec<PairEntry>,
    pub primitivity: PrimitivityCheck,
}

impl FusionReport {
    pub fn all_passed(&self) -> bool {
        self.primitivity.passed() && self.pairs.iter().all(|p| p.check.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairEntry> {
        self.pairs.iter().filter(|p| !p.check.passed())
    }
}

/// Checks the law on every pair of eigenbasis vectors with index at most
/// `window`, and that the 1-eigenspace of `ad_a` in the window is `<a>`.
///
/// Eigenvectors whose eigenvalue is outside the law's spectrum make the
/// sweep an error.
pub fn verify_axis(axis: Axis, law: &FusionLaw, window: u64) -> Result<FusionReport> {
    let field = law.field();
    let basis = eigenbasis(axis, window, field);
    let mut pairs = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let check =
                check_fusion_pair(&x.vector, &x.eigenvalue, &y.vector, &y.eigenvalue, axis, law)?;
            pairs.push(PairEntry {
                left: x.label(),
                right: y.label(),
                check,
            });
        }
    }
    Ok(FusionReport {
        axis,
        window,
        field,
        law: law.name().to_string(),
        pairs,
        primitivity: primitivity(axis, window, field),
    })
}

/// Dimension count of `ker(ad_a - 1)` on the window around `axis`.
pub fn primitivity(axis: Axis, window: u64, field: Field) -> PrimitivityCheck {
    let a = axis.element(field);
    let mut basis = vec![BasisIndex::A(axis.0)];
    for j in 1..=window {
        basis.push(BasisIndex::A(axis.0 - j as i64));
        basis.push(BasisIndex::A(axis.0 + j as i64));
        basis.push(BasisIndex::S(j));
    }
    let images: Vec<Element> = basis
        .iter()
        .map(|&b| {
            let e = Element::basis(b, field);
            &a * &e - e
        })
        .collect();
    let r = rank(field, &images);
    PrimitivityCheck {
        ambient_dim: basis.len(),
        one_eigenspace_dim: basis.len() - r,
    }
}

/// Random linear combinations inside eigenspaces, checked against `law`.
/// Returns the checks that failed.
pub fn sample_random_pairs(
    axis: Axis,
    law: &FusionLaw,
    window: u64,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<Vec<PairCheck>> {
    let field = law.field();
    let basis = eigenbasis(axis, window, field);
    fn random_eigenvector(
        rng: &mut impl Rng,
        basis: &[EigenbasisVector],
        lam: &Scalar,
    ) -> Element {
        let mut v = Element::zero(lam.field());
        for b in basis.iter().filter(|b| &b.eigenvalue == lam) {
            v.add_scaled_assign(&sampling::scalar(rng, lam.field()), &b.vector);
        }
        v
    }
    let spectrum = law.spectrum();
    let mut failures = Vec::new();
    for _ in 0..trials {
        let lam = &spectrum[rng.random_range(0..spectrum.len())];
        let mu = &spectrum[rng.random_range(0..spectrum.len())];
        let x = random_eigenvector(rng, &basis, lam);
        let y = random_eigenvector(rng, &basis, mu);
        let check = check_fusion_pair(&x, lam, &y, mu, axis, law)?;
        if !check.passed() {
            failures.push(check);
        }
    }
    Ok(failures)
}
