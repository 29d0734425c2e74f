//! Free associative algebras: words, noncommutative polynomials and the
//! monomial order used by the rewriting engine.
//!
//! Generator indices double as precedence ranks: index 0 is the smallest
//! generator. Each generator also carries a weight. Words are compared by
//! total weight, then by length, then lexicographically by rank. With unit
//! weights this is plain deglex.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use smallvec::SmallVec;
use thiserror::Error;

use crate::gf::{Fe, Field};

pub use parse::{parse_poly, parse_word, PolyEnv, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("generator names must be single ASCII letters, got {0:?}")]
    BadName(String),
    #[error("duplicate generator {0:?}")]
    Duplicate(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A word in generator indices. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u8; 12]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Word {
        let mut v = SmallVec::new();
        v.push(i as u8);
        Word(v)
    }

    pub fn from_letters(letters: &[u8]) -> Word {
        Word(SmallVec::from_slice(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    /// Position of the first occurrence of `sub`, if any.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        let (h, n) = (&self.0, &sub.0);
        if n.len() > h.len() {
            return None;
        }
        (0..=h.len() - n.len()).find(|&i| &h[i..i + n.len()] == n.as_slice())
    }

    pub fn contains(&self, sub: &Word) -> bool {
        self.find(sub).is_some()
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut v = SmallVec::new();
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Generator names in ascending precedence, with order weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<char>,
    weights: Vec<u32>,
}

impl Alphabet {
    /// Names listed in ascending precedence; all weights 1.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Alphabet, AlgError> {
        let mut out = Vec::new();
        for n in names {
            let n = n.as_ref();
            let mut chars = n.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(AlgError::BadName(n.to_string()));
            };
            if !c.is_ascii_alphabetic() {
                return Err(AlgError::BadName(n.to_string()));
            }
            if out.contains(&c) {
                return Err(AlgError::Duplicate(n.to_string()));
            }
            out.push(c);
        }
        let weights = vec![1; out.len()];
        Ok(Alphabet {
            names: out,
            weights,
        })
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Alphabet {
        assert_eq!(weights.len(), self.names.len());
        self.weights = weights;
        self
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> char {
        self.names[i]
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index(&self, c: char) -> Option<usize> {
        self.names.iter().position(|&n| n == c)
    }

    pub fn weight_of(&self, w: &Word) -> u32 {
        w.0.iter().map(|&l| self.weights[l as usize]).sum()
    }

    /// The monomial order of this alphabet (weighted deglex).
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.weight_of(a)
            .cmp(&self.weight_of(b))
            .then_with(|| a.cmp(b))
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        OrderKey(self.weight_of(w), w.clone())
    }

    pub fn word(&self, s: &str) -> Result<Word, AlgError> {
        parse_word(s, self)
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        let l = w.letters();
        let mut i = 0;
        while i < l.len() {
            let mut j = i;
            while j < l.len() && l[j] == l[i] {
                j += 1;
            }
            s.push(self.names[l[i] as usize]);
            if j - i > 1 {
                let _ = write!(s, "^{}", j - i);
            }
            i = j;
        }
        s
    }

    /// Polynomial text, largest term first, in `coeff*word` form.
    pub fn fmt_poly(&self, f: &NcPoly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Word, &Fe)> = f.terms.iter().collect();
        terms.sort_by(|a, b| self.compare(b.0, a.0));
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(w, c)| match (w.is_empty(), c.0) {
                (true, _) => c.to_string(),
                (false, 1) => self.fmt_word(w),
                (false, _) => format!("{}*{}", c, self.fmt_word(w)),
            })
            .collect();
        parts.join(" + ")
    }
}

/// Sort key realizing the weighted order via the derived `Ord`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderKey(pub u32, pub Word);

/// Plain degree-lexicographic comparison: length first, then precedence.
pub fn compare_deglex(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}

/// A noncommutative polynomial with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NcPoly {
    terms: BTreeMap<Word, Fe>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn one() -> NcPoly {
        NcPoly::monomial(Word::empty(), Fe::ONE)
    }

    pub fn constant(c: Fe) -> NcPoly {
        NcPoly::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Fe) -> NcPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn word(w: Word) -> NcPoly {
        NcPoly::monomial(w, Fe::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, Fe)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Word) -> Fe {
        self.terms.get(w).copied().unwrap_or(Fe::ZERO)
    }

    /// Longest word length, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn add_term(&mut self, w: Word, c: Fe, f: &Field) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = f.add(*e.get(), c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: Fe, f: &Field) {
        for (w, &d) in &other.terms {
            self.add_term(w.clone(), f.mul(c, d), f);
        }
    }

    pub fn add(&self, other: &NcPoly, f: &Field) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(other, Fe::ONE, f);
        out
    }

    pub fn sub(&self, other: &NcPoly, f: &Field) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(other, f.neg(Fe::ONE), f);
        out
    }

    pub fn scale(&self, c: Fe, f: &Field) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, &d)| (w.clone(), f.mul(c, d))).collect(),
        }
    }

    pub fn neg(&self, f: &Field) -> NcPoly {
        self.scale(f.neg(Fe::ONE), f)
    }

    pub fn mul(&self, other: &NcPoly, f: &Field) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a.concat(b), f.mul(c, d), f);
            }
        }
        out
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, &c)| (u.concat(w).concat(v), c))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize, f: &Field) -> NcPoly {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = out.mul(self, f);
        }
        out
    }

    /// Commutator `ab - ba`.
    pub fn commutator(a: &NcPoly, b: &NcPoly, f: &Field) -> NcPoly {
        a.mul(b, f).sub(&b.mul(a, f), f)
    }

    /// Largest term under the alphabet's order.
    pub fn leading(&self, a: &Alphabet) -> Option<(&Word, Fe)> {
        self.terms
            .iter()
            .max_by(|x, y| a.compare(x.0, y.0))
            .map(|(w, &c)| (w, c))
    }

    /// Letters occurring in any term.
    pub fn letters(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.terms.keys().flat_map(|w| w.0.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn word_text_round_trip() {
        let a = Alphabet::new(&["x", "h", "g"]).unwrap();
        let w = a.word("g^3hx").unwrap();
        assert_eq!(w.letters(), &[2, 2, 2, 1, 0]);
        assert_eq!(a.fmt_word(&w), "g^3hx");
        assert_eq!(a.fmt_word(&Word::empty()), "1");
    }

    #[test]
    fn weights_dominate_length() {
        let a = Alphabet::new(&["x", "g"]).unwrap().with_weights(vec![1, 0]);
        let gx = a.word("gx").unwrap();
        let g3 = a.word("g^3").unwrap();
        assert_eq!(a.compare(&gx, &g3), Ordering::Greater);
        assert_eq!(compare_deglex(&gx, &g3), Ordering::Less);
        let f = make_field(2, 1).unwrap();
        let p = parse_poly("gx + xg + g + g^3", &a, &PolyEnv::default(), &f).unwrap();
        assert_eq!(p.leading(&a).unwrap().0, &gx);
    }
}
