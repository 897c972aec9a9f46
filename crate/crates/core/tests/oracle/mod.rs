// Reference arithmetic for the integration tests. Written straight from the
// product rules over the rationals, with its own representation, and shared
// with the library only through `Element::from_terms`.

#![allow(dead_code)]

use std::collections::HashMap;

use highwater::{BasisIndex, Element, Field, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Key {
    A(i64),
    S(i64),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Vector(pub HashMap<Key, BigRational>);

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Vector {
    pub fn a(i: i64) -> Self {
        Vector::default().plus(Key::A(i), q(1, 1))
    }

    pub fn s(j: i64) -> Self {
        Vector::default().plus(Key::S(j), q(1, 1))
    }

    pub fn plus(mut self, k: Key, c: BigRational) -> Self {
        if let Key::S(0) = k {
            return self;
        }
        let e = self.0.entry(k).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
        self
    }

    pub fn add(&self, other: &Vector) -> Self {
        self.axpy(&q(1, 1), other)
    }

    pub fn sub(&self, other: &Vector) -> Self {
        self.axpy(&q(-1, 1), other)
    }

    pub fn axpy(&self, c: &BigRational, other: &Vector) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.0 {
            out = out.plus(*k, c * v);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Vector::default().axpy(c, self)
    }

    pub fn mul(&self, other: &Vector) -> Self {
        let mut out = Vector::default();
        for (k1, c1) in &self.0 {
            for (k2, c2) in &other.0 {
                out = out.axpy(&(c1 * c2), &basis_mul(*k1, *k2));
            }
        }
        out
    }

    pub fn weight(&self) -> BigRational {
        self.0
            .iter()
            .filter(|(k, _)| matches!(k, Key::A(_)))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// The moment `Σ i·r_i` of the a-coefficients.
    pub fn moment(&self) -> BigRational {
        self.0
            .iter()
            .filter_map(|(k, c)| match k {
                Key::A(i) => Some(c * BigInt::from(*i)),
                Key::S(_) => None,
            })
            .sum()
    }

    pub fn to_element(&self, field: Field) -> Element {
        Element::from_terms(
            field,
            self.0.iter().map(|(k, c)| {
                let idx = match *k {
                    Key::A(i) => BasisIndex::A(i),
                    Key::S(j) => BasisIndex::S(j as u64),
                };
                (idx, Scalar::from_rational(c, field).expect("denominators are powers of two"))
            }),
        )
    }
}

pub fn basis_mul(x: Key, y: Key) -> Vector {
    let v = Vector::default();
    match (x, y) {
        (Key::A(i), Key::A(j)) => v
            .plus(Key::A(i), q(1, 2))
            .plus(Key::A(j), q(1, 2))
            .plus(Key::S((i - j).abs()), q(1, 1)),
        (Key::A(i), Key::S(j)) | (Key::S(j), Key::A(i)) => v
            .plus(Key::A(i), q(-3, 4))
            .plus(Key::A(i - j), q(3, 8))
            .plus(Key::A(i + j), q(3, 8))
            .plus(Key::S(j), q(3, 2)),
        (Key::S(i), Key::S(j)) => v
            .plus(Key::S(i), q(3, 4))
            .plus(Key::S(j), q(3, 4))
            .plus(Key::S((i - j).abs()), q(-3, 8))
            .plus(Key::S(i + j), q(-3, 8)),
    }
}

/// `c_j = 2a_k - a_{k-j} - a_{k+j}`.
pub fn c(j: i64, k: i64) -> Vector {
    if j == 0 {
        return Vector::default();
    }
    Vector::a(k).scale(&q(2, 1)).sub(&Vector::a(k - j)).sub(&Vector::a(k + j))
}

pub fn u(j: i64, k: i64) -> Vector {
    c(j, k).scale(&q(3, 1)).axpy(&q(4, 1), &Vector::s(j))
}

pub fn v(j: i64, k: i64) -> Vector {
    c(j, k).axpy(&q(-4, 1), &Vector::s(j))
}

pub fn w(j: i64, k: i64) -> Vector {
    Vector::a(k - j).sub(&Vector::a(k + j))
}

/// `x_{i,j} = -2x_i - 2x_j + x_{|i-j|} + x_{i+j}` for a family `x`.
pub fn pair(x: impl Fn(i64) -> Vector, i: i64, j: i64) -> Vector {
    x(i).scale(&q(-2, 1))
        .axpy(&q(-2, 1), &x(j))
        .add(&x((i - j).abs()))
        .add(&x(i + j))
}
