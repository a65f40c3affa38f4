//! Text parser for the workbench polynomial grammar:
//!
//! ```text
//! expression ::= ["+"|"-"] term (("+"|"-") term)*
//! term       ::= [coeff "*"] factor ("*" factor)* | coeff
//! factor     ::= var ["^" posint]
//! coeff      ::= int | int "/" posint
//! ```
//!
//! Whitespace is insignificant; variables must be declared in the ring.

use crate::{Integer, Monomial, PolyError, Polynomial, Rational, RingRef};
use num_traits::Zero;

pub fn parse_poly(text: &str, ring: &RingRef) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(PolyError::Parse {
            pos: p.pos,
            message: format!("unexpected character `{}`", p.src[p.pos] as char),
        });
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
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

    fn expression(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term(negate)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term(false)?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term(true)?;
                    acc = &acc + &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, negate: bool) -> Result<Polynomial, PolyError> {
        let mut coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let q = self.coeff()?;
                if !self.eat(b'*') {
                    // bare constant term
                    let c = if negate { -q } else { q };
                    return Ok(Polynomial::constant(self.ring, c));
                }
                q
            }
            _ => Rational::from_integer(Integer::from(1)),
        };
        if negate {
            coeff = -coeff;
        }
        let mut exps = vec![0u32; self.ring.nvars()];
        self.factor(&mut exps)?;
        while self.eat(b'*') {
            self.factor(&mut exps)?;
        }
        Ok(Polynomial::from_term(self.ring, Monomial::new(exps), coeff))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), PolyError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
            _ => {
                return Err(PolyError::Parse {
                    pos: self.pos,
                    message: "expected a variable".into(),
                })
            }
        }
        let ident_start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[ident_start..self.pos]).unwrap();
        let index = self.ring.var_index(name).ok_or(PolyError::UnknownVariable {
            pos: start,
            name: name.to_string(),
        })?;
        let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
        exps[index] = exps[index].checked_add(exp).ok_or(PolyError::Parse {
            pos: start,
            message: "exponent overflow".into(),
        })?;
        Ok(())
    }

    fn coeff(&mut self) -> Result<Rational, PolyError> {
        let (_, numer) = self.integer_literal()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dpos = self.pos;
            let (_, denom) = self.integer_literal()?;
            if denom.is_zero() {
                return Err(PolyError::ZeroDenominator { pos: dpos });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn integer_literal(&mut self) -> Result<(usize, Integer), PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PolyError::Parse {
                pos: start,
                message: "expected an integer".into(),
            });
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok((start, digits.parse::<Integer>().unwrap()))
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        let (pos, value) = self.integer_literal()?;
        u32::try_from(value).map_err(|_| PolyError::Parse {
            pos,
            message: "exponent too large".into(),
        })
    }
}
