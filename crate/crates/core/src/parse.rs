//! Parser for the ASCII surface syntax.
//!
//! Formula connectives are `*`, `/`, `\`, `(+)`, `(/)`, `(\)`; the structural
//! ones wrap the same tokens in dots (`.*.`, `.(/).`, ...). Binary
//! applications never associate: every nested application must be
//! parenthesized, only the outermost one of each side may stand bare.

use thiserror::Error;

use crate::term::{Atom, Connective, Formula, Polarity, PolarityError, Sequent, Structure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Polarity(#[from] PolarityError),
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { offset, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(String),
    LParen,
    RParen,
    Op { op: Connective, structural: bool },
    Turnstile,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        if let Some((op, len)) = formula_op_at(rest) {
            toks.push((Tok::Op { op, structural: false }, start));
            i += len;
        } else if c == b'(' {
            toks.push((Tok::LParen, start));
            i += 1;
        } else if c == b')' {
            toks.push((Tok::RParen, start));
            i += 1;
        } else if c == b'.' {
            match formula_op_at(&rest[1..]) {
                Some((op, len)) if rest[1 + len..].starts_with('.') => {
                    toks.push((Tok::Op { op, structural: true }, start));
                    i += len + 2;
                }
                _ => return syntax(start, "malformed structural connective"),
            }
        } else if rest.starts_with("|-") {
            toks.push((Tok::Turnstile, start));
            i += 2;
        } else if c.is_ascii_lowercase() {
            let mut j = i + 1;
            while j < bytes.len() && (bytes[j].is_ascii_lowercase() || bytes[j].is_ascii_digit() || bytes[j] == b'_') {
                j += 1;
            }
            toks.push((Tok::Atom(text[i..j].to_string()), start));
            i = j;
        } else {
            let ch = rest.chars().next().unwrap_or('?');
            return syntax(start, format!("unexpected character `{ch}`"));
        }
    }
    Ok(toks)
}

fn formula_op_at(s: &str) -> Option<(Connective, usize)> {
    const TABLE: [(&str, Connective); 6] = [
        ("(+)", Connective::Coprod),
        ("(/)", Connective::RDiff),
        ("(\\)", Connective::LDiff),
        ("*", Connective::Prod),
        ("/", Connective::Over),
        ("\\", Connective::Under),
    ];
    TABLE.iter().find(|(t, _)| s.starts_with(t)).map(|(t, op)| (*op, t.len()))
}

/// Untyped syntax tree; typing into formulas or structures happens afterwards.
#[derive(Debug)]
enum Raw {
    Atom(String, usize),
    Bin { op: Connective, structural: bool, offset: usize, left: Box<Raw>, right: Box<Raw> },
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Raw, ParseError> {
        let left = self.primary()?;
        let (op, structural) = match self.peek() {
            Some(Tok::Op { op, structural }) => (*op, *structural),
            _ => return Ok(left),
        };
        let offset = self.offset();
        self.pos += 1;
        let right = self.primary()?;
        if let Some(Tok::Op { .. }) = self.peek() {
            return syntax(self.offset(), "missing parentheses: connectives do not associate");
        }
        Ok(Raw::Bin { op, structural, offset, left: Box::new(left), right: Box::new(right) })
    }

    fn primary(&mut self) -> Result<Raw, ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Atom(name)) => {
                self.pos += 1;
                Ok(Raw::Atom(name, offset))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => syntax(self.offset(), "expected `)`"),
                }
            }
            Some(_) => syntax(offset, "expected an atom or `(`"),
            None => syntax(offset, "unexpected end of input"),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::RParen) => syntax(self.offset(), "unbalanced `)`"),
            Some(_) => syntax(self.offset(), "unexpected trailing input"),
        }
    }
}

fn to_formula(raw: &Raw) -> Result<Formula, ParseError> {
    match raw {
        Raw::Atom(name, offset) => match Atom::new(name) {
            Ok(a) => Ok(Formula::Atom(a)),
            Err(e) => syntax(*offset, e.to_string()),
        },
        Raw::Bin { op, structural, offset, left, right } => {
            if *structural {
                return syntax(*offset, "structural connective inside a formula");
            }
            Ok(Formula::binary(*op, to_formula(left)?, to_formula(right)?))
        }
    }
}

fn to_structure(raw: &Raw, pol: Polarity) -> Result<Structure, ParseError> {
    match raw {
        Raw::Bin { op, structural: true, left, right, .. } => {
            let (pl, pr) = op.operand_polarities(op.structural_polarity());
            Ok(Structure::node(*op, to_structure(left, pl)?, to_structure(right, pr)?))
        }
        _ => Ok(Structure::Leaf(to_formula(raw)?, pol)),
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let raw = p.expr()?;
    p.expect_end()?;
    to_formula(&raw)
}

/// Parses a structure expected to have polarity `pol`.
pub fn parse_structure(text: &str, pol: Polarity) -> Result<Structure, ParseError> {
    let mut p = Parser::new(text)?;
    let raw = p.expr()?;
    p.expect_end()?;
    let s = to_structure(&raw, pol)?;
    s.validate(pol)?;
    Ok(s)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(text)?;
    let lhs = p.expr()?;
    match p.peek() {
        Some(Tok::Turnstile) => p.pos += 1,
        _ => return syntax(p.offset(), "expected `|-`"),
    }
    let rhs = p.expr()?;
    p.expect_end()?;
    let lhs = to_structure(&lhs, Polarity::Input)?;
    let rhs = to_structure(&rhs, Polarity::Output)?;
    Ok(Sequent::new(lhs, rhs)?)
}
