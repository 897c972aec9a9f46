//! Dense univariate polynomials over a [`Field`], just enough for
//! characteristic polynomials of small matrices.

use std::fmt;

use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    // ascending degree, no trailing zeros
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Self {
        let f = root.field();
        Self::new(f, vec![-root, f.one()])
    }

    /// `Π (x - r)` over `roots`.
    pub fn from_roots<'a>(field: Field, roots: impl IntoIterator<Item = &'a Scalar>) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(field.one()), |acc, r| acc.mul(&Self::linear(r)))
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients in ascending degree.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &acc * x + c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = !magnitude.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", magnitude.coefficient_text())?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(x I - m)` by cofactor expansion; fine for the 4x4 matrices used here.
pub fn characteristic_polynomial(m: &[Vec<Scalar>], field: Field) -> Polynomial {
    let n = m.len();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(-&m[i][j]);
                    if i == j {
                        c.add(&Polynomial::new(field, vec![field.zero(), field.one()]))
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    determinant(&entries, field)
}

fn determinant(m: &[Vec<Polynomial>], field: Field) -> Polynomial {
    match m.len() {
        0 => Polynomial::constant(field.one()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::new(field, vec![]);
            for col in 0..n {
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].mul(&determinant(&minor, field));
                acc = if col % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_and_display() {
        let q = Field::rationals();
        let roots = [q.one(), q.zero(), q.ratio(2, 1), q.ratio(1, 2)];
        let p = Polynomial::from_roots(q, &roots);
        assert_eq!(p.to_string(), "x^4 - 7/2*x^3 + 7/2*x^2 - x");
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn char_poly_of_triangular_matrix() {
        let q = Field::rationals();
        let m = vec![
            vec![q.ratio(2, 1), q.ratio(5, 1)],
            vec![q.zero(), q.ratio(3, 1)],
        ];
        let p = characteristic_polynomial(&m, q);
        assert_eq!(p, Polynomial::from_roots(q, &[q.ratio(2, 1), q.ratio(3, 1)]));
    }
}
