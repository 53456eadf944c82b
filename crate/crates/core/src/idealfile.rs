//! Ideal files: a ring declaration followed by named ideals.
//!
//! ```text
//! file      = ring-decl { ideal-decl } ;
//! ring-decl = "ring" field "[" name { "," name } "]" [ "graded" | "affine" ] ;
//! field     = "QQ" | "GF" "(" prime ")" ;
//! ideal-decl = "ideal" name "=" [ poly { "," poly } ] ";" ;
//! ```
//!
//! `#` starts a comment running to the end of the line. A comment of the form
//! `# lc: yes` or `# lc: assumed` labels the next ideal.

use std::path::Path;

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::polyring::{CoefficientField, PolyParser, Ring, RingMode, RingRef, Tok, Token, tokenize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcLabel {
    Yes,
    Assumed,
}

#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: String,
    pub ideal: Ideal,
    pub lc: Option<LcLabel>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: RingRef,
    pub ideals: Vec<NamedIdeal>,
}

impl IdealFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (clean, labels) = strip_comments(text)?;
        let tokens = tokenize(&clean, 1, 1)?;
        let end = clean.lines().enumerate().last().map_or((1, 1), |(i, l)| (i + 1, l.chars().count() + 1));
        let mut cur = Cursor { tokens: &tokens, pos: 0, end };
        let ring = parse_ring(&mut cur)?;
        let mut ideals: Vec<NamedIdeal> = Vec::new();
        let mut labels = labels.into_iter().peekable();
        while cur.pos < tokens.len() {
            let (line, column) = cur.location();
            cur.keyword("ideal")?;
            let name = cur.ident()?;
            if ideals.iter().any(|i| i.name == name) {
                return Err(Error::syntax(format!("ideal `{name}` defined twice"), line, column));
            }
            cur.expect(&Tok::Equals, "`=`")?;
            let mut lc = None;
            while labels.peek().is_some_and(|(l, _)| *l < line) {
                lc = labels.next().map(|(_, v)| v);
            }
            let gens = parse_list(&ring, &mut cur)?;
            ideals.push(NamedIdeal { name, ideal: Ideal::new(&ring, gens), lc, line });
        }
        if ideals.is_empty() {
            let (l, c) = cur.location();
            return Err(Error::syntax("expected at least one `ideal` declaration", l, c));
        }
        Ok(IdealFile { ring, ideals })
    }

    pub fn get(&self, name: &str) -> Result<&NamedIdeal> {
        self.ideals.iter().find(|i| i.name == name).ok_or_else(|| Error::UnknownIdeal(name.to_string()))
    }
}

/// Blanks out comments (keeping columns) and collects `lc` labels by line.
fn strip_comments(text: &str) -> Result<(String, Vec<(usize, LcLabel)>)> {
    let mut out = String::with_capacity(text.len());
    let mut labels = Vec::new();
    for (n, line) in text.lines().enumerate() {
        match line.find('#') {
            Some(at) => {
                out.push_str(&line[..at]);
                out.extend(std::iter::repeat_n(' ', line[at..].chars().count()));
                let body = line[at + 1..].trim();
                if let Some(value) = body.strip_prefix("lc:") {
                    let label = match value.trim() {
                        "yes" => LcLabel::Yes,
                        "assumed" => LcLabel::Assumed,
                        other => {
                            let column = line[..at].chars().count() + 1;
                            return Err(Error::syntax(
                                format!("lc label must be `yes` or `assumed`, got `{other}`"),
                                n + 1,
                                column,
                            ));
                        }
                    };
                    labels.push((n + 1, label));
                }
            }
            None => out.push_str(line),
        }
        out.push('\n');
    }
    Ok((out, labels))
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl Cursor<'_> {
    fn location(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn error(&self, what: &str) -> Error {
        let (l, c) = self.location();
        match self.tokens.get(self.pos) {
            Some(_) => Error::syntax(format!("expected {what}"), l, c),
            None => Error::syntax(format!("expected {what}, found end of file"), l, c),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("a name")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(&format!("`{kw}`"))),
        }
    }
}

fn parse_ring(cur: &mut Cursor) -> Result<RingRef> {
    cur.keyword("ring")?;
    let (line, column) = cur.location();
    let field = match cur.ident()?.as_str() {
        "QQ" => CoefficientField::Rational,
        "GF" => {
            cur.expect(&Tok::LParen, "`(`")?;
            let p = match cur.peek() {
                Some(Tok::Int(v)) => v.to_string(),
                _ => return Err(cur.error("a prime")),
            };
            cur.pos += 1;
            cur.expect(&Tok::RParen, "`)`")?;
            let p: u32 = p.parse().map_err(|_| Error::syntax(format!("modulus {p} is too large"), line, column))?;
            CoefficientField::prime(p)
                .map_err(|e| Error::syntax(e.to_string().trim_start_matches("invalid ring declaration: "), line, column))?
        }
        other => return Err(Error::syntax(format!("unknown field `{other}`, expected QQ or GF(p)"), line, column)),
    };
    cur.expect(&Tok::LBracket, "`[`")?;
    let (vl, vc) = cur.location();
    let mut names = vec![cur.ident()?];
    while cur.peek() == Some(&Tok::Comma) {
        cur.pos += 1;
        names.push(cur.ident()?);
    }
    cur.expect(&Tok::RBracket, "`,` or `]`")?;
    let mode = match cur.peek() {
        Some(Tok::Ident(s)) if s == "affine" => {
            cur.pos += 1;
            RingMode::Affine
        }
        Some(Tok::Ident(s)) if s == "graded" => {
            cur.pos += 1;
            RingMode::Graded
        }
        _ => RingMode::Graded,
    };
    Ring::new(field, &names, mode)
        .map_err(|e| Error::syntax(e.to_string().trim_start_matches("invalid ring declaration: "), vl, vc))
}

fn parse_list(ring: &RingRef, cur: &mut Cursor) -> Result<Vec<crate::polyring::Polynomial>> {
    let mut gens = Vec::new();
    if cur.peek() == Some(&Tok::Semi) {
        cur.pos += 1;
        return Ok(gens);
    }
    let start = cur.pos;
    let stop = cur.tokens[start..]
        .iter()
        .position(|t| t.tok == Tok::Semi)
        .map(|k| start + k)
        .ok_or_else(|| {
            cur.pos = cur.tokens.len();
            cur.error("`;`")
        })?;
    let slice = &cur.tokens[start..stop];
    let semi = &cur.tokens[stop];
    let mut parser = PolyParser::new(ring, slice, (semi.line, semi.column));
    loop {
        gens.push(parser.parse_poly()?);
        match parser.peek() {
            Some(Tok::Comma) => parser.bump(),
            None => break,
            Some(Tok::Slash) => {
                let (line, column) = parser.location();
                return Err(Error::DivisionInInput { line, column });
            }
            Some(_) => {
                let (l, c) = parser.location();
                return Err(Error::syntax("expected `,` or `;`", l, c));
            }
        }
    }
    cur.pos = stop + 1;
    Ok(gens)
}
