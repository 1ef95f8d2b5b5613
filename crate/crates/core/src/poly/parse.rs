//! Plaintext polynomial reader.
//!
//! Accepts sums and differences of products of integers, `x`, `y`, `z` and
//! parenthesised subexpressions, with non-negative integer powers via `^`.
//! Everything printed by `Display` parses back to the same polynomial.

use num_bigint::BigInt;

use super::TracePolynomial;
use crate::error::{Error, Result};

pub fn parse_poly(text: &str) -> Result<TracePolynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { offset: self.pos, message: msg.to_string() }
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

    fn expr(&mut self) -> Result<TracePolynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<TracePolynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.try_mul(&self.power()?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<TracePolynomial> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        let k: u32 = digits.parse().map_err(|_| Error::Syntax { offset: start, message: "bad exponent".into() })?;
        let mut acc = TracePolynomial::one();
        for _ in 0..k {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<TracePolynomial> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(TracePolynomial::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(TracePolynomial::y())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(TracePolynomial::z())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(TracePolynomial::constant(n))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_expressions() {
        let a = parse_poly("(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(a, parse_poly("x^2 + y^2").unwrap());
        assert_eq!(parse_poly("-(z)").unwrap(), -TracePolynomial::z());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x $").is_err());
        assert!(parse_poly("q").is_err());
    }
}
