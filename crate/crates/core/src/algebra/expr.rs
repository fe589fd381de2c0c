//! Text syntax for polynomials and rational functions in `t`.
//!
//! Grammar (usual precedence, `^` binds tightest and takes an integer exponent):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | implicit)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 't' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so `3t` and `2(1-t)` parse.

use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::poly::LaurentPoly;
use super::ratfunc::RationalFunction;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Parses and evaluates an expression to a canonical rational function.
pub fn parse_rational(src: &str) -> Result<RationalFunction> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(v)
}

/// Parses an expression that must evaluate to an integer Laurent polynomial.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    let r = parse_rational(src)?;
    r.as_laurent_poly().cloned().ok_or_else(|| Error::EntryNotInRing { entry: src.to_string(), ring: "Z[t,t^-1]".to_string() })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: String::from(message) }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul_ref(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                Some(b't') | Some(b'(') => acc = acc.mul_ref(&self.power()?),
                Some(c) if c.is_ascii_digit() => return Err(self.error("number cannot follow a factor without an operator")),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        self.skip_ws();
        let e = self.integer()?;
        let e: i32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
        base.pow(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(RationalFunction::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalFunction::from_int(self.integer()?)),
            Some(_) => Err(self.error("expected a number, 't' or '('")),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_laurent("1-t").unwrap(), p(0, &[1, -1]));
        assert_eq!(parse_laurent("1 - 3*t + t^2").unwrap(), p(0, &[1, -3, 1]));
        assert_eq!(parse_laurent("3t^2 - t^-1").unwrap(), p(-1, &[-1, 0, 0, 3]));
        assert_eq!(parse_laurent("-(1+t)^2").unwrap(), p(0, &[-1, -2, -1]));
        assert_eq!(parse_laurent("0").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn rational_functions() {
        let r = parse_rational("(1-3*t+t^2)/(1-t)^2").unwrap();
        assert_eq!(r.numer(), &p(0, &[1, -3, 1]));
        assert_eq!(r.denom(), &p(0, &[1, -2, 1]));
        assert_eq!(parse_rational("1/2 + 1/2").unwrap(), RationalFunction::one());
        assert_eq!(parse_rational("(t^2+t^3)/t^2").unwrap(), RationalFunction::from_poly(p(0, &[1, 1])));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_rational("1/(0)"), Err(Error::ZeroDenominator));
        assert_eq!(parse_rational("(1-t)/(t-t)"), Err(Error::ZeroDenominator));
        assert!(matches!(parse_rational("1 +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rational("(1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rational("x"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_rational(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_laurent("1/(1-t)"), Err(Error::EntryNotInRing { .. })));
    }
}
