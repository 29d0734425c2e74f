//! Text syntax for words and polynomials.
//!
//! Words are juxtapositions of single-letter generators with `^` powers
//! (`g^3hx`). Polynomials accept sums and differences, optional `*`,
//! parentheses, commutators `[a,b]`, an optional `lhs = rhs` form and
//! named parameters. Exponents may be integer parameters or small integer
//! expressions in parentheses (`g^(mu+1)`).

use std::collections::BTreeMap;

use super::{AlgError, Alphabet, NcPoly, Word};
use crate::gf::{Fe, Field};

/// A parameter value: an integer (discrete parameter) or a field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(i64),
    Elem(Fe),
}

impl Scalar {
    pub fn to_field(self, f: &Field) -> Fe {
        match self {
            Scalar::Int(n) => f.from_int(n),
            Scalar::Elem(e) => e,
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Elem(e) => write!(f, "{e}"),
        }
    }
}

/// Named parameters and the reading of numeric literals.
#[derive(Clone, Debug, Default)]
pub struct PolyEnv {
    pub params: BTreeMap<String, Scalar>,
    /// When set, literals are integers mapped through Z -> F; otherwise
    /// they are element encodings.
    pub integer_literals: bool,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Param(String),
    Gen(u8),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eq,
}

fn err(pos: usize, msg: impl Into<String>) -> AlgError {
    AlgError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(s: &str, a: &Alphabet, env: &PolyEnv) -> Result<Vec<(usize, Tok)>, AlgError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n = s[start..i]
                    .parse()
                    .map_err(|_| err(start, "number too large"))?;
                out.push((start, Tok::Num(n)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'')
                {
                    i += 1;
                }
                let ident = &s[start..i];
                if env.params.contains_key(ident) {
                    out.push((start, Tok::Param(ident.to_string())));
                } else {
                    for (off, ch) in ident.char_indices() {
                        let idx = a
                            .index(ch)
                            .ok_or_else(|| err(start + off, format!("unknown symbol {ident:?}")))?;
                        out.push((start + off, Tok::Gen(idx as u8)));
                    }
                }
            }
            _ => {
                let t = match c {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'[' => Tok::LBrack,
                    b']' => Tok::RBrack,
                    b',' => Tok::Comma,
                    b'=' => Tok::Eq,
                    _ => return Err(err(start, format!("unexpected character {:?}", c as char))),
                };
                out.push((start, t));
                i += 1;
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    env: &'a PolyEnv,
    f: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), AlgError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(err(self.at(), format!("expected {t:?}")))
        }
    }

    fn relation(&mut self) -> Result<NcPoly, AlgError> {
        let lhs = self.expr()?;
        if self.eat(&Tok::Eq) {
            let rhs = self.expr()?;
            Ok(lhs.sub(&rhs, self.f))
        } else {
            Ok(lhs)
        }
    }

    fn expr(&mut self) -> Result<NcPoly, AlgError> {
        let mut acc = NcPoly::zero();
        let mut sign = Fe::ONE;
        if self.eat(&Tok::Minus) {
            sign = self.f.neg(Fe::ONE);
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let t = self.term()?;
            acc.add_scaled(&t, sign, self.f);
            if self.eat(&Tok::Plus) {
                sign = Fe::ONE;
            } else if self.eat(&Tok::Minus) {
                sign = self.f.neg(Fe::ONE);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Param(_) | Tok::Gen(_) | Tok::LParen | Tok::LBrack)
        )
    }

    fn term(&mut self) -> Result<NcPoly, AlgError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) || self.starts_factor() {
                let rhs = self.factor()?;
                acc = acc.mul(&rhs, self.f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NcPoly, AlgError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let at = self.at();
            let e = self.int_atom()?;
            if e < 0 {
                return Err(err(at, "negative exponent"));
            }
            Ok(base.pow(e as usize, self.f))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<NcPoly, AlgError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = if self.env.integer_literals {
                    self.f.from_int(n as i64)
                } else {
                    let code = u32::try_from(n).map_err(|_| err(at, "literal too large"))?;
                    self.f
                        .elem(code)
                        .map_err(|_| err(at, format!("{n} is not an element of {}", self.f)))?
                };
                Ok(NcPoly::constant(c))
            }
            Some(Tok::Param(name)) => {
                self.pos += 1;
                Ok(NcPoly::constant(self.env.params[&name].to_field(self.f)))
            }
            Some(Tok::Gen(g)) => {
                self.pos += 1;
                Ok(NcPoly::word(Word::letter(g as usize)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::LBrack) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(&Tok::Comma)?;
                let b = self.expr()?;
                self.expect(&Tok::RBrack)?;
                Ok(NcPoly::commutator(&a, &b, self.f))
            }
            _ => Err(err(at, "expected a term")),
        }
    }

    fn int_atom(&mut self) -> Result<i64, AlgError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n as i64)
            }
            Some(Tok::Param(name)) => {
                self.pos += 1;
                match self.env.params[&name] {
                    Scalar::Int(n) => Ok(n),
                    Scalar::Elem(_) => Err(err(at, format!("{name} is not an integer"))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.int_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(v)
            }
            _ => Err(err(at, "expected an exponent")),
        }
    }

    fn int_expr(&mut self) -> Result<i64, AlgError> {
        let mut acc = self.int_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc += self.int_term()?;
            } else if self.eat(&Tok::Minus) {
                acc -= self.int_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn int_term(&mut self) -> Result<i64, AlgError> {
        let mut acc = self.int_atom()?;
        while self.eat(&Tok::Star) {
            acc *= self.int_atom()?;
        }
        Ok(acc)
    }
}

/// Parses a polynomial, or a relation `lhs = rhs` (returned as `lhs - rhs`).
pub fn parse_poly(s: &str, a: &Alphabet, env: &PolyEnv, f: &Field) -> Result<NcPoly, AlgError> {
    let toks = lex(s, a, env)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
        env,
        f,
    };
    let out = p.relation()?;
    if p.pos != p.toks.len() {
        return Err(err(p.at(), "trailing input"));
    }
    Ok(out)
}

/// Parses a word such as `g^3hx`; `1` is the empty word.
pub fn parse_word(s: &str, a: &Alphabet) -> Result<Word, AlgError> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let b = s.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let idx = a
            .index(c)
            .ok_or_else(|| AlgError::UnknownGenerator(c.to_string()))?;
        i += 1;
        let mut n = 1usize;
        if i < b.len() && b[i] == b'^' {
            i += 1;
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            n = s[start..i]
                .parse()
                .map_err(|_| err(start, "expected exponent digits"))?;
        }
        letters.extend(std::iter::repeat(idx as u8).take(n));
    }
    Ok(Word::from_letters(&letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn commutator_and_params() {
        let f = make_field(2, 2).unwrap();
        let a = Alphabet::new(&["x", "h", "g"]).unwrap();
        let mut env = PolyEnv {
            integer_literals: true,
            ..Default::default()
        };
        env.params.insert("lambda".into(), Scalar::Elem(Fe(2)));
        let p = parse_poly("[h,x] - lambda*h(1 - g^2)", &a, &env, &f).unwrap();
        let q = parse_poly("hx + xh + 2*h + 2*hg^2", &a, &PolyEnv::default(), &f).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn equation_form_and_int_exponent() {
        let f = make_field(3, 1).unwrap();
        let a = Alphabet::new(&["x", "g"]).unwrap();
        let mut env = PolyEnv::default();
        env.params.insert("mu".into(), Scalar::Int(1));
        let p = parse_poly("gx - xg = g(1 - g^(mu+1))", &a, &env, &f).unwrap();
        let q = parse_poly("gx + 2*xg + 2*g + g^3", &a, &PolyEnv::default(), &f).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_unknown_symbols() {
        let f = make_field(2, 1).unwrap();
        let a = Alphabet::new(&["x"]).unwrap();
        assert!(parse_poly("x + y", &a, &PolyEnv::default(), &f).is_err());
        assert!(parse_poly("2*x", &a, &PolyEnv::default(), &f).is_err());
    }
}
