//! A small expression grammar shared by the ℚ(q) and word-vector parsers.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*' | '·' | '/' | <juxtaposition>) power)*
//! power  := atom ('^' ['-'] int)?
//! atom   := int | 'q' | 'f[' ['-'] int ']' | '(' expr ')' | '-' power
//! ```
//! Letters `f[i]` do not commute; division is only allowed by scalars.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::RatFunc;
use crate::error::{Error, Result};

/// A noncommutative polynomial: words in letter indices with ℚ(q)
/// coefficients.
pub(crate) type NcPoly = BTreeMap<Vec<i32>, RatFunc>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Letter(i32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
}

fn position(src: &str, byte: usize) -> (usize, usize) {
    let before = &src[..byte.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn err_at(src: &str, byte: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(src, byte);
    Error::Parse { line, column, message: message.into() }
}

impl<'a> Lexer<'a> {
    fn tokens(&self) -> Result<Vec<(Tok, usize)>> {
        let src = self.src;
        let mut out = Vec::new();
        let mut pos = 0;
        while let Some(c) = src[pos..].chars().next() {
            let start = pos;
            pos += c.len_utf8();
            let tok = match c {
                c if c.is_whitespace() => continue,
                '0'..='9' => {
                    let digits = src[start..].bytes().take_while(u8::is_ascii_digit).count();
                    pos = start + digits;
                    Tok::Int(src[start..pos].parse().unwrap())
                }
                'q' => Tok::Q,
                'f' => {
                    let rest = &src[pos..];
                    let body = rest
                        .strip_prefix('[')
                        .and_then(|r| r.find(']').map(|k| &r[..k]))
                        .ok_or_else(|| err_at(src, start, "expected f[<index>]"))?;
                    let idx: i32 = body
                        .trim()
                        .parse()
                        .map_err(|_| err_at(src, start + 2, "letter index must be an integer"))?;
                    pos += body.len() + 2;
                    Tok::Letter(idx)
                }
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' | '·' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(err_at(src, start, format!("unexpected character '{other}'"))),
            };
            out.push((tok, start));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn scalar(c: RatFunc) -> NcPoly {
    let mut p = NcPoly::new();
    if !c.is_zero() {
        p.insert(Vec::new(), c);
    }
    p
}

fn add_into(acc: &mut NcPoly, other: NcPoly, negate: bool) {
    for (w, c) in other {
        let c = if negate { -c } else { c };
        let entry = acc.entry(w.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            acc.remove(&w);
        }
    }
}

fn mul(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let entry = out.entry(w.clone()).or_default();
            *entry += &(ca * cb);
            if entry.is_zero() {
                out.remove(&w);
            }
        }
    }
    out
}

fn as_scalar(p: &NcPoly) -> Option<RatFunc> {
    match p.len() {
        0 => Some(RatFunc::zero()),
        1 => p.get(&Vec::new()).cloned(),
        _ => None,
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.1)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        err_at(self.src, self.here(), msg)
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let mut acc = NcPoly::new();
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let t = self.term()?;
        add_into(&mut acc, t, negate);
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            add_into(&mut acc, t, negate);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = mul(&acc, &rhs);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let rhs = self.power()?;
                    let d = as_scalar(&rhs).ok_or_else(|| err_at(self.src, at, "division by a non-scalar"))?;
                    if d.is_zero() {
                        return Err(err_at(self.src, at, "division by zero"));
                    }
                    let inv = scalar(RatFunc::one() / d);
                    acc = mul(&acc, &inv);
                }
                Some(Tok::Int(_)) | Some(Tok::Q) | Some(Tok::Letter(_)) | Some(Tok::LParen) => {
                    let rhs = self.power()?;
                    acc = mul(&acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<NcPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e: i64 = match self.peek() {
            Some(Tok::Int(n)) => {
                let n = i64::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?;
                self.pos += 1;
                if neg {
                    -n
                } else {
                    n
                }
            }
            _ => return Err(self.err("expected an integer exponent")),
        };
        if e < 0 {
            let s = as_scalar(&base).ok_or_else(|| self.err("negative power of a non-scalar"))?;
            let inv = s.inv().ok_or_else(|| self.err("negative power of zero"))?;
            let mut acc = RatFunc::one();
            for _ in 0..(-e) {
                acc = &acc * &inv;
            }
            return Ok(scalar(acc));
        }
        let mut acc = scalar(RatFunc::one());
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<NcPoly> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(scalar(RatFunc::from_rational(n.into()))),
            Tok::Q => Ok(scalar(RatFunc::q_pow(1))),
            Tok::Letter(i) => {
                let mut p = NcPoly::new();
                p.insert(vec![i], RatFunc::one());
                Ok(p)
            }
            Tok::Minus => {
                let inner = self.power()?;
                let mut out = NcPoly::new();
                add_into(&mut out, inner, true);
                Ok(out)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("unexpected token"))
            }
        }
    }
}

pub(crate) fn parse_nc(src: &str) -> Result<NcPoly> {
    let toks = Lexer { src }.tokens()?;
    if toks.is_empty() {
        return Err(err_at(src, 0, "empty expression"));
    }
    let mut p = Parser { src, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses the canonical ℚ(q) string format (and any expression over `q`).
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    let p = parse_nc(src)?;
    as_scalar(&p).ok_or_else(|| err_at(src, 0, "expected a scalar in Q(q), found letters f[i]"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::qint;

    #[test]
    fn parses_canonical_forms() {
        let q = RatFunc::q_pow(1);
        assert_eq!(parse_ratfunc("q + q^-1").unwrap(), RatFunc::from(qint(2)));
        let x = parse_ratfunc("(q^2+1)/(q)").unwrap();
        assert_eq!(x, RatFunc::from(qint(2)));
        assert_eq!(parse_ratfunc("1/2*q").unwrap() * RatFunc::from_int(2), q);
        assert_eq!(parse_ratfunc("-q^-2").unwrap(), -RatFunc::q_pow(-2));
        assert_eq!(parse_ratfunc("2q").unwrap(), RatFunc::from_int(2) * q);
    }

    #[test]
    fn reports_columns() {
        match parse_ratfunc("q + $") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ratfunc("(q + 1").is_err());
        assert!(parse_ratfunc("f[1]").is_err());
        assert!(parse_ratfunc("1/(q-q)").is_err());
    }

    #[test]
    fn noncommuting_letters() {
        let p = parse_nc("f[1]·f[3] - q·f[3]·f[1]").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[&vec![1, 3]], RatFunc::one());
        assert_eq!(p[&vec![3, 1]], -RatFunc::q_pow(1));
        let sq = parse_nc("(f[1] + f[-1])^2").unwrap();
        assert_eq!(sq.len(), 4);
    }
}
