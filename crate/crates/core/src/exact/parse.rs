//! Parser for the canonical expression grammar.
//!
//! Variables `al`, `bt`, `lm1`, `lm1f`, `lm2`, `lm2f`; nonnegative integer
//! literals; operators `+ - * / ^` with the usual precedence and a unary
//! minus; parenthesized subexpressions. `format` and `parse` round-trip
//! exactly.

use super::frac::Frac;
use super::poly::Poly;
use super::vars::Var;
use num::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl fmt::Display) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: BigInt = input[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(lit)));
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                let name = &input[start..i];
                match Var::from_name(name) {
                    Some(v) => toks.push((start, Tok::Var(v))),
                    None => return err(start, format!("unknown variable `{name}`")),
                }
            }
            other => return err(i, format!("unexpected character `{other}`")),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.bump();
                    let rhs = self.factor()?;
                    acc = match acc.div(&rhs) {
                        Ok(v) => v,
                        Err(_) => return err(at, "division by zero"),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            let at = self.here();
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = match e.try_into() {
                        Ok(v) => v,
                        Err(_) => return err(at, "exponent too large"),
                    };
                    return Ok(base.pow_u32(e));
                }
                _ => return err(at, "expected integer exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Frac, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Frac::from_poly(Poly::constant(n.into()))),
            Some(Tok::Var(v)) => Ok(Frac::var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(at, "unclosed parenthesis"),
                }
            }
            Some(t) => err(at, format!("unexpected token {t:?}")),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parses an expression into a normalized fraction.
pub fn parse_frac(input: &str) -> Result<Frac, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: input.len(),
    };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return err(p.here(), "trailing input");
    }
    Ok(out)
}

/// Parses an expression that must be polynomial (constant denominator).
pub fn parse_poly(input: &str) -> Result<Poly, ParseError> {
    let f = parse_frac(input)?;
    match f.den().as_constant() {
        Some(c) => Ok(f.num().scale(&c.recip())),
        None => err(0, format!("`{input}` is not polynomial")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_format_examples() {
        let half_alpha_sq = parse_frac("al^2/2").unwrap();
        assert_eq!(half_alpha_sq.to_string(), "(al^2)/(2)");
        assert_eq!(parse_frac(&half_alpha_sq.to_string()).unwrap(), half_alpha_sq);
    }

    #[test]
    fn five_a_beta_value() {
        let beta = parse_frac("(5*al-1)/8").unwrap();
        assert_eq!(beta, Frac::new(parse_poly("5*al-1").unwrap(), Poly::int(8)).unwrap());
    }

    #[test]
    fn error_carries_position() {
        let e = parse_frac("al + ?").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_frac("al + foo").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_frac("(al").unwrap_err();
        assert_eq!(e.pos, 0);
    }

    #[test]
    fn unary_minus_and_power() {
        assert_eq!(parse_frac("-al^2").unwrap(), Frac::var(Var::Al).pow_u32(2).neg());
        assert_eq!(parse_frac("(-al)^2").unwrap(), Frac::var(Var::Al).pow_u32(2));
    }

    #[test]
    fn poly_rejects_fractions() {
        assert!(parse_poly("al/bt").is_err());
        assert!(parse_poly("al*bt-2").is_ok());
    }
}
