//! Text grammar for polynomials.
//!
//! ```text
//! poly    = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//! term    = factor { "*" factor } ;
//! factor  = "-" factor | power ;
//! power   = primary [ "^" integer ] ;
//! primary = integer [ "/" integer ] | variable | "(" poly ")" ;
//! ```
//!
//! `a/b` is accepted only between two integer literals (a rational
//! constant); any other use of `/` is rejected as division.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Equals,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Splits `text` into tokens; positions are offset by (`line`, `column`).
pub(crate) fn tokenize(text: &str, line: usize, column: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut ln, mut col) = (line, column);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (ln, col);
        if c == '\n' {
            ln += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: tl, column: tc });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), line: tl, column: tc });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '=' => Tok::Equals,
            _ => return Err(Error::syntax(format!("unexpected character `{c}`"), tl, tc)),
        };
        out.push(Token { tok, line: tl, column: tc });
        i += 1;
        col += 1;
    }
    Ok(out)
}

pub(crate) struct PolyParser<'a> {
    ring: &'a RingRef,
    tokens: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> PolyParser<'a> {
    pub(crate) fn new(ring: &'a RingRef, tokens: &'a [Token], end: (usize, usize)) -> Self {
        PolyParser { ring, tokens, pos: 0, end }
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    pub(crate) fn location(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    pub(crate) fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.location();
        Error::syntax(msg, l, c)
    }

    pub(crate) fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.parse_term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.parse_term()?
            }
            _ => self.parse_term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.parse_term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.parse_factor()?;
                    acc = acc.try_mul(&rhs)?;
                }
                Some(Tok::Slash) => {
                    let (line, column) = self.location();
                    return Err(Error::DivisionInInput { line, column });
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(self.parse_factor()?.neg());
        }
        let base = self.parse_primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let e = match self.peek() {
            Some(Tok::Int(v)) => v.clone(),
            _ => return Err(self.error("expected an integer exponent")),
        };
        self.bump();
        let cap = self.ring.degree_cap();
        let e = e.to_u32().filter(|&e| e <= cap).ok_or(Error::DegreeCapExceeded { cap })?;
        if let Some(d) = base.degree() {
            if d.saturating_mul(e) > cap {
                return Err(Error::DegreeCapExceeded { cap });
            }
        }
        Ok(base.pow(e))
    }

    fn parse_primary(&mut self) -> Result<Polynomial> {
        let Some(token) = self.tokens.get(self.pos) else {
            return Err(self.error("unexpected end of input"));
        };
        let (line, column) = (token.line, token.column);
        match &token.tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.bump();
                if self.peek() == Some(&Tok::Slash) {
                    let (sl, sc) = self.location();
                    self.bump();
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return Err(Error::DivisionInInput { line: sl, column: sc });
                    };
                    self.bump();
                    if d.is_zero() {
                        return Err(Error::syntax("zero denominator", sl, sc));
                    }
                    let c = self
                        .ring
                        .field()
                        .from_fraction(&n, &d)
                        .ok_or_else(|| Error::syntax("denominator vanishes in the coefficient field", sl, sc))?;
                    return Ok(Polynomial::constant(self.ring, c));
                }
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Tok::Ident(name) => {
                let idx = self.ring.variable_index(name).ok_or_else(|| Error::UnknownVariable {
                    name: name.clone(),
                    line,
                    column,
                })?;
                self.bump();
                Ok(Polynomial::variable(self.ring, idx))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.parse_poly()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Slash => Err(Error::DivisionInInput { line, column }),
            other => Err(Error::syntax(format!("unexpected token {other:?}"), line, column)),
        }
    }
}

/// Parses a single polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let tokens = tokenize(text, 1, 1)?;
    let end = (1, text.chars().count() + 1);
    let mut parser = PolyParser::new(ring, &tokens, end);
    if tokens.is_empty() {
        return Err(Error::syntax("empty polynomial", 1, 1));
    }
    let p = parser.parse_poly()?;
    if parser.position() != tokens.len() {
        let (l, c) = parser.location();
        if parser.peek() == Some(&Tok::Slash) {
            return Err(Error::DivisionInInput { line: l, column: c });
        }
        return Err(Error::syntax("trailing input", l, c));
    }
    Ok(p)
}

/// Parses a comma separated list of polynomials.
pub fn parse_polynomials(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    let tokens = tokenize(text, 1, 1)?;
    let end = (1, text.chars().count() + 1);
    let mut parser = PolyParser::new(ring, &tokens, end);
    let mut out = Vec::new();
    if tokens.is_empty() {
        return Ok(out);
    }
    loop {
        out.push(parser.parse_poly()?);
        match parser.peek() {
            Some(Tok::Comma) => parser.bump(),
            None => return Ok(out),
            Some(Tok::Slash) => {
                let (line, column) = parser.location();
                return Err(Error::DivisionInInput { line, column });
            }
            Some(_) => {
                let (l, c) = parser.location();
                return Err(Error::syntax("expected `,`", l, c));
            }
        }
    }
}
