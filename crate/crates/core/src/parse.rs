//! Text syntax for polynomials: declared variable names, integer
//! coefficients, `+ - * ^` and parentheses. `*` may be omitted.

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

fn tokenize(ring: &PolyRing, s: &str) -> Result<Vec<Tok>> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = s[start..i].parse().map_err(|_| err(format!("integer too large: {}", &s[start..i])))?;
                toks.push(Tok::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                split_identifier(ring, &s[start..i], &mut toks)?;
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// Splits an identifier like `x0x1` into declared variable names, longest
/// match first.
fn split_identifier(ring: &PolyRing, ident: &str, toks: &mut Vec<Tok>) -> Result<()> {
    let names = ring.names();
    let mut rest = ident;
    while !rest.is_empty() {
        let best = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                toks.push(Tok::Var(i));
                rest = &rest[n.len()..];
                // leftover digits after a full name act as a numeric factor
                let digits = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
                if digits > 0 && !names.iter().any(|n| rest.starts_with(n.as_str())) {
                    let v: i64 = rest[..digits].parse().map_err(|_| err("integer too large"))?;
                    toks.push(Tok::Int(v));
                    rest = &rest[digits..];
                }
            }
            None => return Err(err(format!("unknown variable in `{ident}`"))),
        }
    }
    Ok(())
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.power()?;
                    acc = acc.mul(&f)?;
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.power()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) if (0..=1000).contains(&e) => Ok(base.pow(e as u32)),
                _ => Err(err("exponent must be a small non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Tok::Int(v)) => Ok(self.ring.constant(v)),
            Some(Tok::Var(i)) => Ok(self.ring.var(i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(err("missing `)`")),
                }
            }
            Some(t) => Err(err(format!("unexpected token {t:?}"))),
            None => Err(err("unexpected end of input")),
        }
    }
}

pub fn parse_polynomial(ring: &PolyRing, s: &str) -> Result<Polynomial> {
    let toks = tokenize(ring, s)?;
    if toks.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::standard(4, Field::default()).unwrap()
    }

    #[test]
    fn grammar_variants() {
        let r = ring();
        let a = r.parse("x0*x2 - x1^2").unwrap();
        assert_eq!(r.parse("x0x2-x1^2").unwrap(), a);
        assert_eq!(r.parse("-x1 x1 + x2 x0").unwrap(), a);
        assert_eq!(r.parse("(x0+x1)*(x0-x1)").unwrap(), r.parse("x0^2-x1^2").unwrap());
        assert_eq!(r.parse("2x0").unwrap(), r.parse("2*x0").unwrap());
        assert_eq!(r.parse("0").unwrap(), r.zero());
    }

    #[test]
    fn parse_errors() {
        let r = ring();
        assert!(r.parse("y0").is_err());
        assert!(r.parse("x0 +").is_err());
        assert!(r.parse("x0 ^ x1").is_err());
        assert!(r.parse("").is_err());
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in proptest::collection::vec((proptest::collection::vec(0u16..4, 4), -50i64..50), 0..8)) {
            let r = ring();
            let f = r.field();
            let p = Polynomial::from_terms(&r, terms.iter().map(|(e, c)| (crate::monomial::Monomial::from_exponents(e), f.from_i64(*c))).collect());
            let text = p.to_string();
            prop_assert_eq!(r.parse(&text).unwrap(), p);
        }
    }
}
