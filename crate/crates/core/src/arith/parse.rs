//! Text grammar for polynomials.
//!
//! ```text
//! poly    := sign? term (sign term)*
//! sign    := '+' | '-'
//! term    := factor ('*' factor)*
//! factor  := atom ('^' digits)?
//! atom    := number | name | '(' poly ')'
//! number  := digits ('/' digits)?
//! name    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored. Names must belong to the ring's
//! variable list (`x0..xN`, `a b c d`, `u1..uK`, `l m` by convention).
//! Example: `3/2*x0^2*x3 - (x1 + x2)^2 + 7`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{MultiPoly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, vars: &Vars) -> Result<MultiPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, vars };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a point literal such as `(1:3:5:2)` or `1,3,5,2`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    let t = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let sep = if t.contains(':') { ':' } else { ',' };
    t.split(sep).map(super::rational::parse_rational).collect()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.vars);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let mut d = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(MultiPoly::constant(self.vars, Rational::new(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                MultiPoly::var_named(self.vars, name)
            }
            _ => Err(self.err("expected a number, a variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn grammar_basics() {
        let v = Vars::projective(3);
        let f = parse_poly(" 2*x0^2*x3 -x1 + 1/2 ", &v).unwrap();
        assert_eq!(f.nterms(), 3);
        assert_eq!(f.eval(&[rat(1), rat(1), rat(0), rat(1)]), ratio(3, 2));
        let g = parse_poly("(x0 - x1)^2", &v).unwrap();
        assert_eq!(g, parse_poly("x0^2 - 2*x0*x1 + x1^2", &v).unwrap());
    }

    #[test]
    fn grammar_errors() {
        let v = Vars::projective(2);
        assert!(matches!(parse_poly("x7", &v), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_poly("x0 +", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x0 x1", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0", &v), Err(Error::Parse { .. })));
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("(1:3:5:2)").unwrap(), vec![rat(1), rat(3), rat(5), rat(2)]);
        assert_eq!(parse_point("1/2, -1").unwrap(), vec![ratio(1, 2), rat(-1)]);
    }
}
