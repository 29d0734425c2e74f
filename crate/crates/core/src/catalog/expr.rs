//! A small predicate language over parameter values.
//!
//! ```text
//! pred    := conj ("or" conj)*
//! conj    := unary ("and" unary)*
//! unary   := "not" unary | "exists" binders ":" pred | "true" | "false"
//!          | chain | "(" pred ")"
//! binders := name ("," name)* "in" domain ("," binders)?
//! chain   := sum (("=" | "!=") sum)+
//! sum     := ["-"] term (("+" | "-") term)*
//! term    := factor ("*" factor)*
//! factor  := atom ("^" exponent)?
//! atom    := number | name | "(" sum ")"
//! ```
//!
//! Names may carry a trailing `'` (the second parameter tuple of an
//! isomorphism criterion). Arithmetic happens in the field; `p` is the
//! characteristic unless bound. Domains are `F`, `F*`, `Fp`, `Fp*`,
//! element sets `{0,1}` and integer sets `int{1,2,4}` or `int{1..p-1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::freealg::Scalar;
use crate::gf::{Fe, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unbound name {0:?}")]
    Unbound(String),
}

fn err(pos: usize, msg: impl Into<String>) -> ExprError {
    ExprError::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Where a parameter or a bound variable ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Field,
    FieldNonzero,
    Prime,
    PrimeNonzero,
    /// Field elements given as integers, such as `{0,1}`.
    Elems(Vec<i64>),
    /// Integer values usable as exponents, such as `int{1,2,4}`.
    Ints(Vec<i64>),
    /// The integers `1..p-1`.
    IntUnits,
}

impl Domain {
    pub fn parse(s: &str) -> Result<Domain, ExprError> {
        let toks = lex(s)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: s.len(),
        };
        let d = p.domain()?;
        if p.pos != p.toks.len() {
            return Err(err(p.at(), "trailing input"));
        }
        Ok(d)
    }

    /// All values over `f`, in a fixed order.
    pub fn values(&self, f: &Field) -> Vec<Scalar> {
        let p = f.p() as i64;
        match self {
            Domain::Field => f.elements().map(Scalar::Elem).collect(),
            Domain::FieldNonzero => f.elements().skip(1).map(Scalar::Elem).collect(),
            Domain::Prime => (0..p).map(|n| Scalar::Elem(f.from_int(n))).collect(),
            Domain::PrimeNonzero => (1..p).map(|n| Scalar::Elem(f.from_int(n))).collect(),
            Domain::Elems(v) => {
                let mut out: Vec<Fe> = v.iter().map(|&n| f.from_int(n)).collect();
                out.dedup();
                out.into_iter().map(Scalar::Elem).collect()
            }
            Domain::Ints(v) => v.iter().map(|&n| Scalar::Int(n)).collect(),
            Domain::IntUnits => (1..p).map(Scalar::Int).collect(),
        }
    }

    pub fn contains(&self, v: Scalar, f: &Field) -> bool {
        match (self, v) {
            (Domain::Ints(_) | Domain::IntUnits, Scalar::Int(_)) => self.values(f).contains(&v),
            (Domain::Ints(_) | Domain::IntUnits, Scalar::Elem(_)) => false,
            (_, Scalar::Int(n)) => self.values(f).contains(&Scalar::Elem(f.from_int(n))),
            (_, Scalar::Elem(e)) => {
                e.0 < f.order() as u16 && self.values(f).contains(&Scalar::Elem(e))
            }
        }
    }

    /// Whether the domain is the whole field.
    pub fn is_free(&self) -> bool {
        matches!(self, Domain::Field)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Domain::Field => write!(f, "F"),
            Domain::FieldNonzero => write!(f, "F*"),
            Domain::Prime => write!(f, "Fp"),
            Domain::PrimeNonzero => write!(f, "Fp*"),
            Domain::Elems(v) => write!(f, "{{{}}}", list(v)),
            Domain::Ints(v) => write!(f, "int{{{}}}", list(v)),
            Domain::IntUnits => write!(f, "int{{1..p-1}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, IntExpr),
}

/// Integer exponent: literals, `p`, sums, differences and products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntExpr {
    Num(i64),
    P,
    Add(Box<IntExpr>, Box<IntExpr>),
    Sub(Box<IntExpr>, Box<IntExpr>),
    Mul(Box<IntExpr>, Box<IntExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pred {
    Const(bool),
    Chain(Vec<Expr>, Vec<CmpOp>),
    Not(Box<Pred>),
    And(Vec<Pred>),
    Or(Vec<Pred>),
    Exists(Vec<(String, Domain)>, Box<Pred>),
}

pub type Env = BTreeMap<String, Scalar>;

impl IntExpr {
    fn eval(&self, p: i64) -> i64 {
        match self {
            IntExpr::Num(n) => *n,
            IntExpr::P => p,
            IntExpr::Add(a, b) => a.eval(p) + b.eval(p),
            IntExpr::Sub(a, b) => a.eval(p) - b.eval(p),
            IntExpr::Mul(a, b) => a.eval(p) * b.eval(p),
        }
    }
}

impl Expr {
    pub fn eval(&self, env: &Env, f: &Field) -> Result<Fe, ExprError> {
        Ok(match self {
            Expr::Num(n) => f.from_int(*n),
            Expr::Var(v) => match env.get(v) {
                Some(s) => s.to_field(f),
                None if v == "p" => f.from_int(f.p() as i64),
                None => return Err(ExprError::Unbound(v.clone())),
            },
            Expr::Neg(a) => f.neg(a.eval(env, f)?),
            Expr::Add(a, b) => f.add(a.eval(env, f)?, b.eval(env, f)?),
            Expr::Sub(a, b) => f.sub(a.eval(env, f)?, b.eval(env, f)?),
            Expr::Mul(a, b) => f.mul(a.eval(env, f)?, b.eval(env, f)?),
            Expr::Pow(a, e) => {
                let base = a.eval(env, f)?;
                let e = e.eval(f.p() as i64);
                if e == 0 {
                    Fe::ONE
                } else {
                    f.pow(base, e).unwrap_or(Fe::ZERO)
                }
            }
        })
    }

    fn free_vars(&self, bound: &BTreeSet<String>, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !bound.contains(v) && v != "p" {
                    out.insert(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.free_vars(bound, out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.free_vars(bound, out);
                b.free_vars(bound, out);
            }
        }
    }
}

impl Pred {
    pub fn parse(s: &str) -> Result<Pred, ExprError> {
        let toks = lex(s)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: s.len(),
        };
        let out = p.pred()?;
        if p.pos != p.toks.len() {
            return Err(err(p.at(), "trailing input"));
        }
        Ok(out)
    }

    pub fn eval(&self, env: &Env, f: &Field) -> Result<bool, ExprError> {
        match self {
            Pred::Const(b) => Ok(*b),
            Pred::Chain(es, ops) => {
                let vals = es
                    .iter()
                    .map(|e| e.eval(env, f))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ops.iter().enumerate().all(|(i, op)| match op {
                    CmpOp::Eq => vals[i] == vals[i + 1],
                    CmpOp::Ne => vals[i] != vals[i + 1],
                }))
            }
            Pred::Not(a) => Ok(!a.eval(env, f)?),
            Pred::And(v) => {
                for a in v {
                    if !a.eval(env, f)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Pred::Or(v) => {
                for a in v {
                    if a.eval(env, f)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Pred::Exists(binders, body) => {
                let mut env = env.clone();
                exists(binders, body, &mut env, f)
            }
        }
    }

    /// Names used but not bound by a quantifier.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&BTreeSet::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &BTreeSet<String>, out: &mut BTreeSet<String>) {
        match self {
            Pred::Const(_) => {}
            Pred::Chain(es, _) => es.iter().for_each(|e| e.free_vars(bound, out)),
            Pred::Not(a) => a.collect_free(bound, out),
            Pred::And(v) | Pred::Or(v) => v.iter().for_each(|a| a.collect_free(bound, out)),
            Pred::Exists(binders, body) => {
                let mut b = bound.clone();
                b.extend(binders.iter().map(|(n, _)| n.clone()));
                body.collect_free(&b, out);
            }
        }
    }
}

fn exists(
    binders: &[(String, Domain)],
    body: &Pred,
    env: &mut Env,
    f: &Field,
) -> Result<bool, ExprError> {
    let Some(((name, dom), rest)) = binders.split_first() else {
        return body.eval(env, f);
    };
    let saved = env.get(name).copied();
    let mut found = false;
    for v in dom.values(f) {
        env.insert(name.clone(), v);
        if exists(rest, body, env, f)? {
            found = true;
            break;
        }
    }
    match saved {
        Some(v) => env.insert(name.clone(), v),
        None => env.remove(name),
    };
    Ok(found)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Eq,
    Ne,
    DotDot,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let start = i;
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let n = s[start..i].parse().map_err(|_| err(start, "number too large"))?;
            out.push((start, Tok::Num(n)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            while i < b.len() && b[i] == b'\'' {
                i += 1;
            }
            out.push((start, Tok::Name(s[start..i].to_string())));
            continue;
        }
        let (t, len) = match c {
            b'+' => (Tok::Plus, 1),
            b'-' => (Tok::Minus, 1),
            b'*' => (Tok::Star, 1),
            b'^' => (Tok::Caret, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'{' => (Tok::LBrace, 1),
            b'}' => (Tok::RBrace, 1),
            b',' => (Tok::Comma, 1),
            b':' => (Tok::Colon, 1),
            b'=' => (Tok::Eq, 1),
            b'!' if b.get(i + 1) == Some(&b'=') => (Tok::Ne, 2),
            b'.' if b.get(i + 1) == Some(&b'.') => (Tok::DotDot, 2),
            _ => return Err(err(start, format!("unexpected character {:?}", c as char))),
        };
        out.push((start, t));
        i += len;
    }
    Ok(out)
}

const KEYWORDS: [&str; 7] = ["and", "or", "not", "exists", "in", "true", "false"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
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

    fn eat_kw(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Name(n)) if n == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), ExprError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(err(self.at(), format!("expected {t:?}")))
        }
    }

    fn name(&mut self) -> Result<String, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Name(n)) if !KEYWORDS.contains(&n.as_str()) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(err(self.at(), "expected a name")),
        }
    }

    fn pred(&mut self) -> Result<Pred, ExprError> {
        let mut parts = vec![self.conj()?];
        while self.eat_kw("or") {
            parts.push(self.conj()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Pred::Or(parts)
        })
    }

    fn conj(&mut self) -> Result<Pred, ExprError> {
        let mut parts = vec![self.unary()?];
        while self.eat_kw("and") {
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Pred::And(parts)
        })
    }

    fn unary(&mut self) -> Result<Pred, ExprError> {
        if self.eat_kw("not") {
            return Ok(Pred::Not(Box::new(self.unary()?)));
        }
        if self.eat_kw("true") {
            return Ok(Pred::Const(true));
        }
        if self.eat_kw("false") {
            return Ok(Pred::Const(false));
        }
        if self.eat_kw("exists") {
            let mut binders = Vec::new();
            loop {
                let mut names = vec![self.name()?];
                while self.eat(&Tok::Comma) {
                    names.push(self.name()?);
                }
                if !self.eat_kw("in") {
                    return Err(err(self.at(), "expected `in`"));
                }
                let d = self.domain()?;
                binders.extend(names.into_iter().map(|n| (n, d.clone())));
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(&Tok::Colon)?;
            return Ok(Pred::Exists(binders, Box::new(self.pred()?)));
        }
        if self.peek() == Some(&Tok::LParen) {
            let save = self.pos;
            if let Ok(c) = self.chain() {
                return Ok(c);
            }
            self.pos = save;
            self.pos += 1;
            let p = self.pred()?;
            self.expect(&Tok::RParen)?;
            return Ok(p);
        }
        self.chain()
    }

    fn chain(&mut self) -> Result<Pred, ExprError> {
        let mut es = vec![self.sum()?];
        let mut ops = Vec::new();
        loop {
            let op = if self.eat(&Tok::Eq) {
                CmpOp::Eq
            } else if self.eat(&Tok::Ne) {
                CmpOp::Ne
            } else {
                break;
            };
            ops.push(op);
            es.push(self.sum()?);
        }
        if ops.is_empty() {
            return Err(err(self.at(), "expected `=` or `!=`"));
        }
        Ok(Pred::Chain(es, ops))
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut acc = if self.eat(&Tok::Minus) {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            Ok(Expr::Pow(Box::new(base), self.int_atom()?))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            _ => Ok(Expr::Var(self.name()?)),
        }
    }

    fn int_atom(&mut self) -> Result<IntExpr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(IntExpr::Num(n))
            }
            Some(Tok::Name(n)) if n == "p" => {
                self.pos += 1;
                Ok(IntExpr::P)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.int_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            _ => Err(err(self.at(), "expected an exponent")),
        }
    }

    fn int_expr(&mut self) -> Result<IntExpr, ExprError> {
        let mut acc = self.int_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = IntExpr::Add(Box::new(acc), Box::new(self.int_term()?));
            } else if self.eat(&Tok::Minus) {
                acc = IntExpr::Sub(Box::new(acc), Box::new(self.int_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn int_term(&mut self) -> Result<IntExpr, ExprError> {
        let mut acc = self.int_atom()?;
        while self.eat(&Tok::Star) {
            acc = IntExpr::Mul(Box::new(acc), Box::new(self.int_atom()?));
        }
        Ok(acc)
    }

    fn int_list(&mut self) -> Result<Vec<i64>, ExprError> {
        let mut v = Vec::new();
        loop {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    v.push(n);
                }
                _ => return Err(err(self.at(), "expected an integer")),
            }
            if !self.eat(&Tok::Comma) {
                return Ok(v);
            }
        }
    }

    fn domain(&mut self) -> Result<Domain, ExprError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::LBrace) => {
                self.pos += 1;
                let v = self.int_list()?;
                self.expect(&Tok::RBrace)?;
                Ok(Domain::Elems(v))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                match n.as_str() {
                    "F" => Ok(if self.eat(&Tok::Star) {
                        Domain::FieldNonzero
                    } else {
                        Domain::Field
                    }),
                    "Fp" => Ok(if self.eat(&Tok::Star) {
                        Domain::PrimeNonzero
                    } else {
                        Domain::Prime
                    }),
                    "int" => {
                        self.expect(&Tok::LBrace)?;
                        let save = self.pos;
                        let units = self.eat(&Tok::Num(1))
                            && self.eat(&Tok::DotDot)
                            && self.eat_kw("p")
                            && self.eat(&Tok::Minus)
                            && self.eat(&Tok::Num(1));
                        let d = if units {
                            Domain::IntUnits
                        } else {
                            self.pos = save;
                            Domain::Ints(self.int_list()?)
                        };
                        self.expect(&Tok::RBrace)?;
                        Ok(d)
                    }
                    _ => Err(err(at, format!("unknown domain {n:?}"))),
                }
            }
            _ => Err(err(at, "expected a domain")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn env(pairs: &[(&str, Scalar)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn chains_and_quantifiers() {
        let f = make_field(2, 2).unwrap();
        let p = Pred::parse("exists i in {0,1}: lambda = lambda' + i").unwrap();
        let e = |a: u16, b: u16| env(&[("lambda", Scalar::Elem(Fe(a))), ("lambda'", Scalar::Elem(Fe(b)))]);
        assert!(p.eval(&e(0, 1), &f).unwrap());
        assert!(!p.eval(&e(0, 2), &f).unwrap());
        assert!(p.eval(&e(2, 3), &f).unwrap());
        let c = Pred::parse("m1*m3 = 0 = m1*m4").unwrap();
        let e2 = env(&[("m1", Scalar::Elem(Fe(1))), ("m3", Scalar::Elem(Fe(0))), ("m4", Scalar::Elem(Fe(2)))]);
        assert!(!c.eval(&e2, &f).unwrap());
    }

    #[test]
    fn parenthesised_arithmetic_and_predicates() {
        let f = make_field(3, 1).unwrap();
        let p = Pred::parse("(a - 1)*(b - 2) = 1 or (a = b and not (a != 0))").unwrap();
        let e = |a: i64, b: i64| env(&[("a", Scalar::Int(a)), ("b", Scalar::Int(b))]);
        assert!(p.eval(&e(2, 0), &f).unwrap());
        assert!(p.eval(&e(0, 0), &f).unwrap());
        assert!(!p.eval(&e(1, 1), &f).unwrap());
        let q = Pred::parse("m2*m4 = m3^(p-1)*m4 and m3^p = m3").unwrap();
        let e3 = env(&[("m2", Scalar::Int(1)), ("m3", Scalar::Int(2)), ("m4", Scalar::Int(1))]);
        assert!(q.eval(&e3, &f).unwrap());
    }

    #[test]
    fn free_variables_and_domains() {
        let p = Pred::parse("exists a, b in Fp, i in {0,1}: a*x' = b + i*y").unwrap();
        let fv: Vec<String> = p.free_vars().into_iter().collect();
        assert_eq!(fv, vec!["x'".to_string(), "y".to_string()]);
        for s in ["F", "F*", "Fp", "Fp*", "{0,1}", "int{1,2,4}", "int{1..p-1}"] {
            assert_eq!(Domain::parse(s).unwrap().to_string(), s);
        }
        let f = make_field(3, 1).unwrap();
        assert_eq!(Domain::IntUnits.values(&f), vec![Scalar::Int(1), Scalar::Int(2)]);
        assert_eq!(Domain::parse("Fp*").unwrap().values(&make_field(2, 2).unwrap()).len(), 1);
        assert!(Pred::parse("a = ").is_err());
    }
}
