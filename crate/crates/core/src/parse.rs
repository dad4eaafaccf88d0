//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! var      := 'x' digit
//! ```
//!
//! Whitespace is insignificant; juxtaposition is not multiplication.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Polynomial, Scalar};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1000;
/// Variables are `x0` through `x9`.
pub const MAX_VARS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable index at position {pos} exceeds x9")]
    VariableIndex { pos: usize },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("expression uses x{index} but only {nvars} variables are allowed")]
    TooManyVariables { index: usize, nvars: usize },
    #[error("division by zero at position {pos}")]
    ZeroDenominator { pos: usize },
}

/// A parsed polynomial together with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: Polynomial,
    pub variables: BTreeSet<usize>,
}

/// Parses with as many variables as the highest index used (at least one).
pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    parse_with(text, None)
}

/// Parses into a ring of exactly `nvars` variables.
pub fn parse_poly_in(text: &str, nvars: usize) -> Result<PolyExpr, ParseError> {
    parse_with(text, Some(nvars))
}

fn parse_with(text: &str, nvars: Option<usize>) -> Result<PolyExpr, ParseError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let variables: BTreeSet<usize> = tokens
        .iter()
        .filter_map(|t| match t.kind {
            Tok::Var(i) => Some(i),
            _ => None,
        })
        .collect();
    let needed = variables.last().map_or(1, |&i| i + 1);
    let n = match nvars {
        Some(n) if needed > n => {
            return Err(ParseError::TooManyVariables {
                index: needed - 1,
                nvars: n,
            })
        }
        Some(n) => n,
        None => needed,
    };
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        nvars: n,
        end: text.len(),
    };
    let poly = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::Syntax {
            pos: t.pos,
            msg: "unexpected token (implicit multiplication is not allowed)".into(),
        });
    }
    Ok(PolyExpr {
        source: text.to_string(),
        poly,
        variables,
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token {
                    kind: Tok::Int(text[start..i].parse().expect("digits")),
                    pos,
                });
                continue;
            }
            b'x' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: "expected digit after 'x'".into(),
                    });
                }
                if i - start > 1 {
                    return Err(ParseError::VariableIndex { pos });
                }
                out.push(Token {
                    kind: Tok::Var((bytes[start] - b'0') as usize),
                    pos,
                });
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                })
            }
        };
        out.push(Token { kind, pos });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    nvars: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, kind: &Tok) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc + self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.eat(&Tok::Caret) {
            let pos = self.here();
            match self.peek().map(|t| t.kind.clone()) {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or(ParseError::ExponentOverflow { pos })?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::Syntax {
                    pos,
                    msg: "expected unsigned exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            });
        };
        self.pos += 1;
        match tok.kind {
            Tok::Int(num) => {
                if self.eat(&Tok::Slash) {
                    let dpos = self.here();
                    match self.peek().map(|t| t.kind.clone()) {
                        Some(Tok::Int(den)) => {
                            self.pos += 1;
                            if den.is_zero() {
                                return Err(ParseError::ZeroDenominator { pos: dpos });
                            }
                            Ok(Polynomial::constant(Scalar::new(num, den), self.nvars))
                        }
                        _ => Err(ParseError::Syntax {
                            pos: dpos,
                            msg: "expected unsigned denominator".into(),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(Scalar::from_integer(num), self.nvars))
                }
            }
            Tok::Var(i) => Ok(Polynomial::var(i, self.nvars)),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(ParseError::Syntax {
                        pos: self.here(),
                        msg: "expected ')'".into(),
                    });
                }
                Ok(inner)
            }
            _ => Err(ParseError::Syntax {
                pos,
                msg: "expected number, variable or '('".into(),
            }),
        }
    }
}
