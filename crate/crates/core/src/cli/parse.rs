//! Element expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('+' | '-') unary | primary
//! primary := integer | 'a' '(' integer ')' | 's' '(' integer ')' | '(' expr ')'
//! ```
//!
//! `*` between two elements is the algebra product, so `a(0)*a(1)` evaluates
//! the product. Products associate to the left; the algebra does not.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::Element;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Scalar),
    Element(Element),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => err(self.pos, format!("expected '{c}', found '{d}'")),
            None => err(self.pos, format!("expected '{c}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign_len = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign_len..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return err(start, "expected an integer");
        }
        self.pos = start + sign_len + digits;
        Ok(self.src[start..self.pos].parse().expect("validated digits"))
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            let at = self.pos;
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, false, at)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, true, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            let at = self.pos;
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = mul(acc, rhs);
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = div(acc, rhs, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(match self.unary()? {
                    Value::Scalar(s) => Value::Scalar(-s),
                    Value::Element(e) => Value::Element(-e),
                })
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Value, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::Scalar(Scalar::from_bigint(&n, self.field)))
            }
            Some('a') => {
                let at = self.pos;
                self.pos += 1;
                self.expect('(')?;
                let i = self.integer()?;
                self.expect(')')?;
                let i: i64 = i
                    .try_into()
                    .or_else(|_| err(at, "axis index out of range"))?;
                Ok(Value::Element(Element::a(i, self.field)))
            }
            Some('s') => {
                let at = self.pos;
                self.pos += 1;
                self.expect('(')?;
                let j = self.integer()?;
                self.expect(')')?;
                if j == BigInt::from(0) {
                    return err(at, "sigma_0 is identically zero");
                }
                let j: u64 = j
                    .try_into()
                    .or_else(|_| err(at, "sigma index must be a positive integer"))?;
                Ok(Value::Element(Element::sigma(j, self.field)))
            }
            Some(c) => err(start, format!("unexpected '{c}'")),
            None => err(start, "unexpected end of input"),
        }
    }

    fn add(&self, l: Value, r: Value, negate: bool, at: usize) -> Result<Value, ParseError> {
        let r = match (negate, r) {
            (true, Value::Scalar(s)) => Value::Scalar(-s),
            (true, Value::Element(e)) => Value::Element(-e),
            (false, r) => r,
        };
        match (l, r) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a + b)),
            (Value::Element(a), Value::Element(b)) => Ok(Value::Element(a + b)),
            (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
                if s.is_zero() {
                    Ok(Value::Element(e))
                } else {
                    err(at, "cannot add a nonzero scalar to an element")
                }
            }
        }
    }
}

fn mul(l: Value, r: Value) -> Value {
    match (l, r) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
        (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
            Value::Element(e.scale(&s))
        }
        (Value::Element(a), Value::Element(b)) => Value::Element(a * b),
    }
}

fn div(l: Value, r: Value, at: usize) -> Result<Value, ParseError> {
    let Value::Scalar(d) = r else {
        return err(at, "cannot divide by an element");
    };
    let inv = d.inverse().or_else(|_| err(at, "division by zero"))?;
    Ok(mul(l, Value::Scalar(inv)))
}

/// Parses an element expression over `field`, e.g. `1/2*a(0) + s(1)` or
/// `(a(0)+a(1))*(a(0)-a(1))`.
pub fn parse_element(text: &str, field: Field) -> Result<Element, ParseError> {
    let mut p = Parser { src: text, pos: 0, field };
    let v = p.expr()?;
    if let Some(c) = p.peek() {
        return err(p.pos, format!("unexpected '{c}'"));
    }
    match v {
        Value::Element(e) => Ok(e),
        Value::Scalar(s) if s.is_zero() => Ok(Element::zero(field)),
        Value::Scalar(_) => err(0, "a nonzero scalar is not an element of the algebra"),
    }
}

/// Splits `a(0), a(1)+s(2)` at top-level commas.
pub fn split_list(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}
