//! Recursive-descent parser for polynomial text.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/') power)*
//! power  := atom ('^' integer)?
//! atom   := number | 'i' | identifier | '(' expr ')' | '-' atom
//! ```
//!
//! Division is only allowed by nonzero constants. The token `i` is the
//! imaginary unit unless the context declares a variable named `i`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::context::{Ctx, VariableContext};
use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Parses a polynomial over the given context.
pub fn parse_poly(text: &str, ctx: &Ctx) -> Result<MultiPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a constant of Q(i).
pub fn parse_scalar(text: &str) -> Result<GaussianRational> {
    let empty = VariableContext::ungraded::<&str>(&[])?;
    let p = parse_poly(text, &empty)?;
    p.constant_value()
        .ok_or_else(|| Error::Parse(format!("`{text}` is not a constant")))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Ctx,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.checked_mul(&self.power()?)?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                let c = d
                    .constant_value()
                    .ok_or_else(|| self.error("division by a non-constant"))?;
                let inv = c.inv().ok_or_else(|| self.error("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.integer()?;
            let e: u32 = n
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
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
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let q = GaussianRational::from(BigRational::from_integer(n));
                Ok(MultiPoly::constant(self.ctx, q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ctx.index_of(name) {
                    Ok(idx) => Ok(MultiPoly::var_at(self.ctx, idx)),
                    Err(_) if name == "i" => Ok(MultiPoly::constant(self.ctx, GaussianRational::i())),
                    Err(e) => Err(e),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }
}

/// Parses a polynomial and checks that it is nonzero where that matters.
pub fn parse_nonzero(text: &str, ctx: &Ctx) -> Result<MultiPoly> {
    let p = parse_poly(text, ctx)?;
    if p.is_zero() {
        return Err(Error::Parse(format!("`{text}` is zero")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Ctx {
        VariableContext::graded(&[("s1", 1), ("s2", 1), ("u", 2), ("v", 2)]).unwrap()
    }

    #[test]
    fn parses_and_round_trips() {
        let c = ctx();
        for text in [
            "s1^2 + 2*s1*s2 + s2^2",
            "-3/2*s1^2 + (1/2+i)*u - i",
            "u*v - 7",
            "s1^4 - s2^4",
            "0",
        ] {
            let p = parse_poly(text, &c).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn arithmetic_in_text() {
        let c = ctx();
        let a = parse_poly("(s1 + s2)^2 - (s1 - s2)^2", &c).unwrap();
        assert_eq!(a.to_string(), "4*s1*s2");
        let b = parse_poly("u/2 + u/2", &c).unwrap();
        assert_eq!(b.to_string(), "u");
    }

    #[test]
    fn errors() {
        let c = ctx();
        assert!(matches!(parse_poly("w + 1", &c), Err(Error::UnknownVariable(_))));
        assert!(parse_poly("s1 / s2", &c).is_err());
        assert!(parse_poly("s1 / 0", &c).is_err());
        assert!(parse_poly("(s1", &c).is_err());
        assert!(parse_poly("s1 s2", &c).is_err());
        assert!(parse_scalar("s1").is_err());
    }
}
