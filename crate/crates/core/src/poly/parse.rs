//! Polynomial expressions: integers, rationals `p/q`, the variables `x`, `y`
//! (and `T`, read as `x`), `+ - * ^` and parentheses.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := atom ('^' integer)?
//! atom    := number ('/' number)? | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Rat;

use super::{bi_const, bi_x, bi_y, BiPoly};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Op(char),
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| *c).collect();
                out.push((pos, Tok::Num(digits.parse().expect("digits"))));
            }
            'x' | 'y' | 'T' | 't' => {
                out.push((pos, Tok::Var(c)));
                i += 1;
            }
            '+' | '-' | '*' | '^' | '/' => {
                out.push((pos, Tok::Op(c)));
                i += 1;
            }
            // unicode minus, as in pasted formulas
            '\u{2212}' => {
                out.push((pos, Tok::Op('-')));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            other => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc * rhs;
                }
                Some(Tok::Op('/')) => return self.err("division is only allowed between integer literals"),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: usize = n
                        .try_into()
                        .ok()
                        .filter(|e| *e <= 64)
                        .ok_or_else(|| Error::Parse {
                            position: self.here(),
                            message: "exponent too large".into(),
                        })?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Op('/')) = self.peek() {
                    if let Some((_, Tok::Num(d))) = self.toks.get(self.pos + 1).cloned() {
                        if d == BigInt::from(0) {
                            self.pos += 1;
                            return self.err("zero denominator");
                        }
                        self.pos += 2;
                        return Ok(bi_const(Rat::new(n, d)));
                    }
                    self.pos += 1;
                    return self.err("expected an integer denominator");
                }
                Ok(bi_const(Rat::from_integer(n)))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(if v == 'y' { bi_y() } else { bi_x() })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `x` and `y` (`T` and `t` are read as `x`).
pub fn parse_bipoly(src: &str) -> Result<BiPoly> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a univariate polynomial (in `T` or `x`).
pub fn parse_unipoly(src: &str) -> Result<super::RatPoly> {
    let p = parse_bipoly(src)?;
    super::as_x_poly(&p).ok_or_else(|| Error::Parse {
        position: 0,
        message: "expected a univariate polynomial (variable T or x)".into(),
    })
}
