//! Textual polynomial syntax: `3/2*x^2*y - y + 1`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' natural]
//! atom   := natural ['/' natural] | identifier | '(' expr ')'
//! ```
//! Juxtaposition multiplies, so `3x^2` and `2 x y` are accepted.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Poly, Ring};
use crate::error::{Error, Result};

/// Parses `text` as a polynomial of `ring`. Errors carry a 1-based column.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Poly> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.error("empty polynomial"));
    }
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: 1, col: self.pos + 1, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.natural()?;
            let n: u64 = n.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.natural()?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    q = BigRational::new(q.to_integer(), den);
                }
                let c = self.ring.field().from_rational(&q).map_err(|e| self.error(&e.to_string()))?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable {name}")))
                    }
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn natural(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn parses_rational_coefficients_and_implicit_products() {
        let r = Ring::polynomial(Field::Rational, &["x", "y"]).unwrap();
        let f = parse_poly(&r, "3/2*x^2*y - y + 1").unwrap();
        let g = parse_poly(&r, "3/2 x^2 y - y + 1").unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "3/2*x^2*y - y + 1");
        assert_eq!(parse_poly(&r, "-(x+y)^2 + x^2").unwrap().to_string(), "-2*x*y - y^2");
    }

    #[test]
    fn reports_column_of_unknown_variable() {
        let r = Ring::polynomial(Field::Rational, &["x"]).unwrap();
        match parse_poly(&r, "x + zz") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly(&r, "").is_err());
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
    }

    #[test]
    fn display_round_trips() {
        let r = Ring::polynomial(Field::prime(5).unwrap(), &["a", "b", "c"]).unwrap();
        let f = parse_poly(&r, "3*a^2*b + 4*c - 1").unwrap();
        assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
    }
}
