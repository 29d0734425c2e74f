//! Bergman-style rewriting: oriented rules, ambiguities, completion and
//! enumeration of irreducible words.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::freealg::{Alphabet, NcPoly, OrderKey, Word};
use crate::gf::{Fe, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    /// A nonzero scalar lies in the ideal: the quotient is the zero ring.
    #[error("inconsistent presentation: 1 = 0 in the quotient")]
    Inconsistent,
}

/// `lead -> tail`, every word of `tail` smaller than `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: NcPoly,
}

impl Rule {
    /// The relation `lead - tail`.
    pub fn as_poly(&self, f: &Field) -> NcPoly {
        NcPoly::word(self.lead.clone()).sub(&self.tail, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// Two reductions applicable to one superword.
///
/// For an overlap, `rules.0`'s lead is a prefix of `superword` and
/// `rules.1`'s lead a suffix starting at `offset`. For an inclusion,
/// `rules.0`'s lead is the whole superword and `rules.1`'s lead occurs at
/// `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub rules: (usize, usize),
    pub superword: Word,
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    field: Field,
    rules: Vec<Rule>,
    /// Rule indices grouped by the first letter of their lead.
    by_first: Vec<Vec<usize>>,
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, field: Field) -> Self {
        let n = alphabet.len();
        RewriteSystem {
            alphabet,
            field,
            rules: Vec::new(),
            by_first: vec![Vec::new(); n],
        }
    }

    /// Orients each nonzero relation into a monic rule without reducing.
    pub fn from_relations(
        alphabet: Alphabet,
        field: Field,
        relations: &[NcPoly],
    ) -> Result<Self, RewriteError> {
        let mut sys = Self::new(alphabet, field);
        for r in relations {
            if let Some(rule) = sys.orient(r)? {
                sys.push(rule);
            }
        }
        Ok(sys)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Turns `r` into a monic rule led by its largest word.
    pub fn orient(&self, r: &NcPoly) -> Result<Option<Rule>, RewriteError> {
        let f = &self.field;
        let Some((lead, c)) = r.leading(&self.alphabet) else {
            return Ok(None);
        };
        if lead.is_empty() {
            return Err(RewriteError::Inconsistent);
        }
        let lead = lead.clone();
        let inv = f.inv(c).expect("leading coefficient is nonzero");
        let mut tail = r.scale(f.neg(inv), f);
        tail.add_term(lead.clone(), Fe::ONE, f);
        Ok(Some(Rule { lead, tail }))
    }

    pub fn push(&mut self, rule: Rule) {
        let first = rule.lead.letters()[0] as usize;
        self.by_first[first].push(self.rules.len());
        self.rules.push(rule);
    }

    fn reindex(&mut self) {
        for v in self.by_first.iter_mut() {
            v.clear();
        }
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first[r.lead.letters()[0] as usize].push(i);
        }
    }

    /// Leftmost occurrence of any lead in `w`, as `(rule, position)`.
    pub fn first_match(&self, w: &Word) -> Option<(usize, usize)> {
        let l = w.letters();
        for pos in 0..l.len() {
            for &ri in &self.by_first[l[pos] as usize] {
                let lead = self.rules[ri].lead.letters();
                if l.len() - pos >= lead.len() && &l[pos..pos + lead.len()] == lead {
                    return Some((ri, pos));
                }
            }
        }
        None
    }

    /// Every `(rule, position)` at which a lead occurs in `w`.
    pub fn matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let l = w.letters();
        let mut out = Vec::new();
        for pos in 0..l.len() {
            for &ri in &self.by_first[l[pos] as usize] {
                let lead = self.rules[ri].lead.letters();
                if l.len() - pos >= lead.len() && &l[pos..pos + lead.len()] == lead {
                    out.push((ri, pos));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.first_match(w).is_none()
    }

    /// Replaces the occurrence of rule `ri`'s lead at `pos` in `w` by its tail.
    pub fn rewrite_word(&self, w: &Word, ri: usize, pos: usize) -> NcPoly {
        let rule = &self.rules[ri];
        let u = w.slice(0, pos);
        let v = w.slice(pos + rule.lead.len(), w.len());
        rule.tail.sandwich(&u, &v)
    }

    /// Normal form: no term contains a lead.
    pub fn normal_form(&self, f: &NcPoly) -> NcPoly {
        let fld = &self.field;
        let a = &self.alphabet;
        let mut todo: BTreeMap<OrderKey, Fe> = f.terms().map(|(w, c)| (a.key(w), c)).collect();
        let mut out = NcPoly::zero();
        while let Some((OrderKey(_, w), c)) = todo.pop_last() {
            match self.first_match(&w) {
                None => out.add_term(w, c, fld),
                Some((ri, pos)) => {
                    for (nw, d) in self.rewrite_word(&w, ri, pos).terms() {
                        let e = fld.mul(c, d);
                        let key = a.key(nw);
                        let cur = todo.get(&key).copied().unwrap_or(Fe::ZERO);
                        let s = fld.add(cur, e);
                        if s.is_zero() {
                            todo.remove(&key);
                        } else {
                            todo.insert(key, s);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn normal_form_word(&self, w: &Word) -> NcPoly {
        self.normal_form(&NcPoly::word(w.clone()))
    }

    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                ambiguities_between(&self.rules, i, j, &mut out);
            }
        }
        out.sort_by(|x, y| {
            self.alphabet
                .compare(&x.superword, &y.superword)
                .then_with(|| (x.rules, x.offset, x.kind).cmp(&(y.rules, y.offset, y.kind)))
        });
        out
    }

    /// Normal form of the difference of the two one-step reductions of the
    /// superword; zero iff the ambiguity resolves.
    pub fn resolve_ambiguity(&self, amb: &Ambiguity) -> NcPoly {
        let f = &self.field;
        let (i, j) = amb.rules;
        let w = &amb.superword;
        let left = self.rewrite_word(w, i, 0);
        let right = self.rewrite_word(w, j, amb.offset);
        self.normal_form(&left.sub(&right, f))
    }

    /// Whether every ambiguity resolves.
    pub fn is_confluent(&self) -> bool {
        self.find_ambiguities()
            .iter()
            .all(|a| self.resolve_ambiguity(a).is_zero())
    }

    /// Breadth-first enumeration of irreducible words, stopping once more than
    /// `cap` words are found. Returns the words in ascending order and whether
    /// the enumeration closed.
    pub fn enumerate_basis(&self, cap: usize) -> (Vec<Word>, bool) {
        let mut all = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        let n = self.alphabet.len();
        while !level.is_empty() {
            let mut next = Vec::new();
            for w in &level {
                for l in 0..n {
                    let mut v = w.clone();
                    v.0.push(l as u8);
                    if !self.has_suffix_lead(&v) {
                        next.push(v);
                    }
                }
            }
            all.extend(next.iter().cloned());
            if all.len() > cap {
                all.sort_by(|x, y| self.alphabet.compare(x, y));
                return (all, false);
            }
            level = next;
        }
        all.sort_by(|x, y| self.alphabet.compare(x, y));
        (all, true)
    }

    fn has_suffix_lead(&self, w: &Word) -> bool {
        let l = w.letters();
        self.rules.iter().any(|r| {
            let lead = r.lead.letters();
            lead.len() <= l.len() && &l[l.len() - lead.len()..] == lead
        })
    }
}

fn ambiguities_between(rules: &[Rule], i: usize, j: usize, out: &mut Vec<Ambiguity>) {
    let u = rules[i].lead.letters();
    let v = rules[j].lead.letters();
    // Overlaps: a proper suffix of u equals a proper prefix of v.
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            let mut sw = u.to_vec();
            sw.extend_from_slice(&v[k..]);
            out.push(Ambiguity {
                kind: AmbiguityKind::Overlap,
                rules: (i, j),
                superword: Word::from_letters(&sw),
                offset: u.len() - k,
            });
        }
    }
    // Inclusions: v occurs inside u.
    if i != j && v.len() <= u.len() {
        for pos in 0..=u.len() - v.len() {
            if u[pos..pos + v.len()] == *v {
                out.push(Ambiguity {
                    kind: AmbiguityKind::Inclusion,
                    rules: (i, j),
                    superword: Word::from_letters(u),
                    offset: pos,
                });
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Confluent,
    CapExceeded,
}

/// Default degree cap: two more than twice the largest relation degree.
pub fn default_degree_cap(relations: &[NcPoly]) -> usize {
    2 + 2 * relations.iter().filter_map(NcPoly::degree).max().unwrap_or(0)
}

/// Completes the system formed by `relations`: resolutions that do not
/// vanish become new rules and the system is kept inter-reduced.
/// Ambiguities are processed smallest superword first.
pub fn complete(
    alphabet: &Alphabet,
    field: &Field,
    relations: &[NcPoly],
    degree_cap: usize,
) -> Result<(RewriteSystem, CompletionStatus), RewriteError> {
    Completer::new(alphabet.clone(), field.clone(), degree_cap).run(relations)
}

/// Completes an existing system.
pub fn complete_system(
    sys: &RewriteSystem,
    degree_cap: usize,
) -> Result<(RewriteSystem, CompletionStatus), RewriteError> {
    let f = sys.field().clone();
    let rels: Vec<NcPoly> = sys.rules().iter().map(|r| r.as_poly(&f)).collect();
    complete(sys.alphabet(), &f, &rels, degree_cap)
}

struct Completer {
    sys: RewriteSystem,
    /// Stable id of each active rule, parallel to `sys.rules`.
    ids: Vec<usize>,
    next_id: usize,
    queue: BTreeSet<(OrderKey, usize, usize, usize, AmbiguityKind)>,
    cap: usize,
}

enum Step {
    Continue,
    CapExceeded,
}

impl Completer {
    fn new(alphabet: Alphabet, field: Field, cap: usize) -> Self {
        Completer {
            sys: RewriteSystem::new(alphabet, field),
            ids: Vec::new(),
            next_id: 0,
            queue: BTreeSet::new(),
            cap,
        }
    }

    fn run(mut self, relations: &[NcPoly]) -> Result<(RewriteSystem, CompletionStatus), RewriteError> {
        let mut pending: Vec<NcPoly> = relations.to_vec();
        if let Step::CapExceeded = self.absorb(&mut pending)? {
            return Ok((self.sys, CompletionStatus::CapExceeded));
        }
        while let Some((_, id_i, id_j, offset, kind)) = self.queue.pop_first() {
            let (Some(i), Some(j)) = (self.position(id_i), self.position(id_j)) else {
                continue;
            };
            let amb = Ambiguity {
                kind,
                rules: (i, j),
                superword: self.superword(i, j, offset, kind),
                offset,
            };
            let s = self.sys.resolve_ambiguity(&amb);
            if !s.is_zero() {
                pending.push(s);
                if let Step::CapExceeded = self.absorb(&mut pending)? {
                    return Ok((self.sys, CompletionStatus::CapExceeded));
                }
            }
        }
        Ok((self.sys, CompletionStatus::Confluent))
    }

    fn position(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    fn superword(&self, i: usize, j: usize, offset: usize, kind: AmbiguityKind) -> Word {
        let u = &self.sys.rules[i].lead;
        match kind {
            AmbiguityKind::Inclusion => u.clone(),
            AmbiguityKind::Overlap => u.slice(0, offset).concat(&self.sys.rules[j].lead),
        }
    }

    /// Adds the pending polynomials as rules, smallest leading word first.
    fn absorb(&mut self, pending: &mut Vec<NcPoly>) -> Result<Step, RewriteError> {
        while !pending.is_empty() {
            let reduced: Vec<NcPoly> = pending
                .drain(..)
                .map(|p| self.sys.normal_form(&p))
                .filter(|p| !p.is_zero())
                .collect();
            let a = self.sys.alphabet.clone();
            let Some(best) = reduced
                .iter()
                .enumerate()
                .min_by(|x, y| a.compare(x.1.leading(&a).unwrap().0, y.1.leading(&a).unwrap().0))
                .map(|(i, _)| i)
            else {
                break;
            };
            let mut reduced = reduced;
            let p = reduced.swap_remove(best);
            pending.extend(reduced);
            let rule = self.sys.orient(&p)?.expect("nonzero");
            if rule.lead.len() > self.cap {
                return Ok(Step::CapExceeded);
            }
            self.insert(rule, pending);
        }
        Ok(Step::Continue)
    }

    fn insert(&mut self, rule: Rule, pending: &mut Vec<NcPoly>) {
        let f = self.sys.field.clone();
        // Retire rules whose leads become reducible.
        let mut keep_rules = Vec::new();
        let mut keep_ids = Vec::new();
        for (r, id) in self.sys.rules.drain(..).zip(self.ids.drain(..)) {
            if r.lead.contains(&rule.lead) {
                pending.push(r.as_poly(&f));
            } else {
                keep_rules.push(r);
                keep_ids.push(id);
            }
        }
        let new_id = self.next_id;
        self.next_id += 1;
        keep_rules.push(rule);
        keep_ids.push(new_id);
        self.sys.rules = keep_rules;
        self.ids = keep_ids;
        self.sys.reindex();
        // Re-reduce tails.
        for i in 0..self.sys.rules.len() {
            let t = self.sys.normal_form(&self.sys.rules[i].tail);
            self.sys.rules[i].tail = t;
        }
        let n = self.sys.rules.len() - 1;
        let mut found = Vec::new();
        for other in 0..=n {
            ambiguities_between(&self.sys.rules, n, other, &mut found);
            if other != n {
                ambiguities_between(&self.sys.rules, other, n, &mut found);
            }
        }
        for amb in found {
            let key = self.sys.alphabet.key(&amb.superword);
            self.queue.insert((
                key,
                self.ids[amb.rules.0],
                self.ids[amb.rules.1],
                amb.offset,
                amb.kind,
            ));
        }
    }
}
