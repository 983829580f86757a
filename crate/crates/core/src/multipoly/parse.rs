//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x0'..'x5' | 'w' | '(' expr ')'
//! ```
//!
//! The right operand of `/` must be a nonzero constant.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::{PolyError, Polynomial, NVARS};
use crate::exactnum::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("exponent overflow at offset {pos}")]
    ExponentOverflow { pos: usize },
    #[error("`w` at offset {pos} is not an element of the coefficient field")]
    NoCubeRoot { pos: usize },
    #[error("expected a constant, got `{0}`")]
    NotConstant(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Omega,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        let single = match ch {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((start, t));
            i += 1;
        } else if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if ch.is_ascii_alphabetic() || ch == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            let tok = match name {
                "w" => Tok::Omega,
                _ => match name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    Some(k) if k < NVARS && name.len() == 2 => Tok::Var(k),
                    _ => {
                        return Err(ParseError::UnknownVariable {
                            pos: start,
                            name: name.to_string(),
                        })
                    }
                },
            };
            out.push((start, tok));
        } else {
            let c = text[start..].chars().next().unwrap();
            return Err(ParseError::Syntax {
                pos: start,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_mul(&rhs)
                        .map_err(|_| ParseError::ExponentOverflow { pos })?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let rhs = self.unary::<F>()?;
                    let inv = rhs
                        .as_constant()
                        .and_then(|c| c.checked_inv())
                        .ok_or_else(|| ParseError::Syntax {
                            pos,
                            msg: "divisor must be a nonzero constant".into(),
                        })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<F: Field>(&mut self) -> Result<Polynomial<F>, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power<F: Field>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            let exp = match self.bump() {
                Some(Tok::Int(n)) => n.to_u16().ok_or(ParseError::ExponentOverflow { pos })?,
                _ => {
                    self.at -= 1;
                    return self.syntax("expected a non-negative integer exponent");
                }
            };
            let deg = base.degree().unwrap_or(0);
            if deg as u64 * exp as u64 > u16::MAX as u64 {
                return Err(ParseError::ExponentOverflow { pos });
            }
            return base
                .checked_pow(exp as u32)
                .map_err(|_: PolyError| ParseError::ExponentOverflow { pos });
        }
        Ok(base)
    }

    fn atom<F: Field>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(F::from_rational(
                &Rational::from_integer(n),
            ))),
            Some(Tok::Var(i)) => Ok(Polynomial::var(i)),
            Some(Tok::Omega) => F::cube_root_of_unity()
                .map(Polynomial::constant)
                .ok_or(ParseError::NoCubeRoot { pos }),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.at -= 1;
                        self.syntax("expected `)`")
                    }
                }
            }
            Some(_) => {
                self.at -= 1;
                self.syntax("expected a number, variable, `w` or `(`")
            }
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `x0..x5` with coefficients in `F`.
pub fn parse<F: Field>(text: &str) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}

/// Parses a single field element such as `3/4`, `-w` or `w^2`.
pub fn parse_element<F: Field>(text: &str) -> Result<F, ParseError> {
    let p = parse::<F>(text)?;
    p.as_constant()
        .ok_or_else(|| ParseError::NotConstant(text.trim().to_string()))
}
