//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | ident | '(' expr ')'
//! ident  := [A-Za-z][A-Za-z0-9_']*
//! ```
//!
//! A leading minus negates the whole term that follows it, so `-x^2` is
//! `-(x^2)` and `-2*x` is `-(2*x)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, PolyError, Signature, Q};

/// Parses `text` into a polynomial over `sig`.
pub fn parse_poly(text: &str, sig: &Arc<Signature>) -> Result<Poly, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, sig };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a rational literal such as `-4/3` or `16`.
pub fn parse_rational(text: &str) -> Result<Q, PolyError> {
    let sig = Signature::empty();
    parse_poly(text, &sig)?
        .as_constant()
        .ok_or(PolyError::Syntax { pos: 0, msg: "expected a rational constant".into() })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: &'a Arc<Signature>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = Poly::zero(self.sig);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let n = self.integer()?;
            let e: u32 = n
                .try_into()
                .map_err(|_| PolyError::Syntax { pos: start, msg: "exponent out of range".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax { pos: at, msg: "zero denominator".into() });
                    }
                    Ok(Poly::constant(self.sig, Q::new(num, den)))
                } else {
                    Ok(Poly::constant(self.sig, Q::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() {
                    let c = self.src[self.pos];
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                Poly::var(self.sig, name)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, identifier or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qf};

    fn g26() -> Arc<Signature> {
        Signature::new([("h_2", 1), ("c_2", 2)]).unwrap()
    }

    #[test]
    fn grassmannian_relation_is_homogeneous_of_degree_five() {
        let p = parse_poly("h_2^5+3*h_2*c_2^2-4*h_2^3*c_2", &g26()).unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn zero_literal() {
        let p = parse_poly("0", &g26()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn ring_identity_cancels() {
        let s = Signature::new([("u", 1), ("v", 1)]).unwrap();
        assert!(parse_poly("(u+v)^2 - u^2 - 2*u*v - v^2", &s).unwrap().is_zero());
    }

    #[test]
    fn unary_minus_binds_weakest() {
        let s = Signature::new([("x", 1)]).unwrap();
        assert_eq!(parse_poly("-x^2", &s).unwrap(), parse_poly("0-(x^2)", &s).unwrap());
        assert_eq!(parse_poly("-2*x+x", &s).unwrap(), parse_poly("-x", &s).unwrap());
    }

    #[test]
    fn rationals_and_primes() {
        let s = Signature::new([("h_3'", 1), ("c'_1", 1)]).unwrap();
        let p = parse_poly("h_3'^2 - 4/3*c'_1^2", &s).unwrap();
        assert_eq!(p.to_string(), "h_3'^2-4/3*c'_1^2");
        assert_eq!(parse_rational("-4/3").unwrap(), qf(-4, 3));
        assert_eq!(parse_rational(" 16 ").unwrap(), q(16));
    }

    #[test]
    fn errors_carry_position_and_name() {
        let s = g26();
        match parse_poly("h_2 + * c_2", &s) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse_poly("h_2*zeta", &s), Err(PolyError::UnknownVariable("zeta".into())));
        assert!(matches!(parse_poly("(h_2", &s), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("1/0", &s), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("h_2 c_2", &s), Err(PolyError::Syntax { .. })));
    }
}
