//! Exact scalars: arbitrary-precision rationals and prime fields of odd
//! characteristic.
//!
//! Every value carries its field. Mixing scalars from different fields in an
//! operator is a programming error and panics; the fallible entry points
//! (`checked_div`, `Element::try_mul`, ...) report it as [`Error`] instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: either the rationals or `GF(p)` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    // 0 encodes the rationals.
    modulus: u64,
}

impl Field {
    pub const fn rationals() -> Self {
        Field { modulus: 0 }
    }

    /// `GF(p)`. Rejects 2 and composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { modulus: p })
    }

    /// 0 for the rationals, `p` for `GF(p)`.
    pub fn characteristic(self) -> u64 {
        self.modulus
    }

    pub fn is_rationals(self) -> bool {
        self.modulus == 0
    }

    pub fn is_char3(self) -> bool {
        self.modulus == 3
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_int(0, self)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_int(1, self)
    }

    /// `num / den` mapped into this field.
    ///
    /// Panics if `den` vanishes in the field; use [`Scalar::from_ratio`] for
    /// the fallible version. Intended for literal constants like `3/8`, whose
    /// denominators are powers of two.
    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        Scalar::from_ratio(num, den, self).expect("denominator vanishes in field")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "q")
        } else {
            write!(f, "gf:{}", self.modulus)
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::rationals());
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidFieldSpec(s.to_string()))?;
        Field::prime(p)
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact field element in canonical form (reduced fraction with positive
/// denominator, or least nonnegative residue), so `==` is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    /// Image of `n` under the canonical ring map `Z -> field`.
    pub fn from_int(n: i64, field: Field) -> Self {
        Self::from_bigint(&BigInt::from(n), field)
    }

    pub fn from_bigint(n: &BigInt, field: Field) -> Self {
        match field.modulus {
            0 => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            p => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar(Repr::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                })
            }
        }
    }

    pub fn from_ratio(num: i64, den: i64, field: Field) -> Result<Self> {
        Self::from_int(num, field).checked_div(&Self::from_int(den, field))
    }

    /// Maps an exact rational into `field`; fails if the denominator vanishes there.
    pub fn from_rational(q: &BigRational, field: Field) -> Result<Self> {
        Self::from_bigint(q.numer(), field).checked_div(&Self::from_bigint(q.denom(), field))
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::rationals(),
            Repr::Residue { modulus, .. } => Field { modulus: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// The rational value, if this scalar lives in the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    /// The canonical residue in `[0, p)`, if this scalar lives in `GF(p)`.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    /// True for rationals below zero. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Rational(q) if q.is_negative())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn check_field(&self, rhs: &Scalar) -> Result<()> {
        let (l, r) = (self.field(), rhs.field());
        if l != r {
            return Err(Error::FieldMismatch { left: l, right: r });
        }
        Ok(())
    }

    fn binary(&self, rhs: &Scalar, op: BinOp) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            })),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q })
                if p == q =>
            {
                let value = match op {
                    BinOp::Add => ((*a as u128 + *b as u128) % *p as u128) as u64,
                    BinOp::Sub => ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                    BinOp::Mul => mul_mod(*a, *b, *p),
                };
                Scalar(Repr::Residue { value, modulus: *p })
            }
            _ => panic!(
                "scalar field mismatch: {} vs {}",
                self.field(),
                rhs.field()
            ),
        }
    }

    /// Coefficient text used inside element expressions: `-3/8`, `2`, or the
    /// bare residue for prime fields.
    pub(crate) fn coefficient_text(&self) -> String {
        match &self.0 {
            Repr::Rational(q) => format_rational(q),
            Repr::Residue { value, .. } => value.to_string(),
        }
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binary(rhs, $op)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binary(&rhs, $op)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binary(rhs, $op)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binary(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.binary(rhs, BinOp::Add);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => write!(f, "{}", format_rational(q)),
            Repr::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}
