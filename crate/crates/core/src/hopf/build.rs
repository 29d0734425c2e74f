use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use super::{GenTag, HopfPresentation};
use crate::findim::{sparse_add_scaled, to_dense, FinAlgebra, FinError, Sparse, TensorSquare};
use crate::freealg::Word;
use crate::gf::{axpy, rank_nullspace, solve, Echelon, Fe, Field, Matrix};
use crate::rewrite::{complete, default_degree_cap, CompletionStatus, RewriteError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseReason {
    /// `1 = 0` follows from the relations.
    ZeroRing,
    /// Completed dimension differs from the expected one.
    DimensionDrop { expected: usize, got: usize },
    /// `Δ(r) ≠ 0` in `A⊗A` for relation `r`.
    NonCoideal { relation: usize },
    /// `ε(r) ≠ 0` for relation `r`.
    CounitNonzero { relation: usize },
    /// A grouplike generator is not invertible or the antipode identities fail.
    AntipodeFailure,
    /// Some other axiom check failed.
    Axiom(Axiom),
}

impl fmt::Display for CollapseReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CollapseReason::ZeroRing => write!(f, "zero-ring"),
            CollapseReason::DimensionDrop { expected, got } => {
                write!(f, "dimension-drop({got}/{expected})")
            }
            CollapseReason::NonCoideal { relation } => write!(f, "non-coideal(relation {relation})"),
            CollapseReason::CounitNonzero { relation } => {
                write!(f, "counit-nonzero(relation {relation})")
            }
            CollapseReason::AntipodeFailure => write!(f, "antipode-failure"),
            CollapseReason::Axiom(a) => write!(f, "axiom-failure({a})"),
        }
    }
}

/// Why a presentation does not define the expected Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    pub reason: CollapseReason,
    pub detail: String,
}

impl fmt::Display for CollapseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}", self.reason)
        } else {
            write!(f, "{}: {}", self.reason, self.detail)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("collapse: {0}")]
    Collapse(CollapseReport),
    #[error("completion exceeded degree cap {0}")]
    CapExceeded(usize),
    #[error(transparent)]
    Infinite(#[from] FinError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("element is not group-like")]
    NotGrouplike,
    #[error("identity is not convolution-invertible: {0}")]
    NotHopf(String),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    Budget { needed: f64, budget: u64 },
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Defaults to two more than twice the largest relation degree.
    pub degree_cap: Option<usize>,
    /// Bound on the number of irreducible words.
    pub basis_cap: usize,
    /// Dimension the caller expects; a mismatch is a collapse.
    pub expected_dim: Option<usize>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            degree_cap: None,
            basis_cap: 4096,
            expected_dim: None,
        }
    }
}

impl BuildOptions {
    pub fn expecting(dim: usize) -> Self {
        BuildOptions {
            expected_dim: Some(dim),
            basis_cap: 4 * dim,
            ..Default::default()
        }
    }
}

/// A finite-dimensional Hopf algebra with explicit structure maps.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub presentation: HopfPresentation,
    pub algebra: FinAlgebra,
    /// `delta[i]` is `Δ(e_i)` in `A⊗A` (index `a * dim + b`).
    pub delta: Vec<Sparse>,
    pub counit: Vec<Fe>,
    /// Column `i` is `S(e_i)`.
    pub antipode: Matrix,
    /// Coordinates of each generator.
    pub generators: Vec<Vec<Fe>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Coassociativity,
    Counit,
    DeltaMultiplicative,
    CounitMultiplicative,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::DeltaMultiplicative,
        Axiom::CounitMultiplicative,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::DeltaMultiplicative => "delta-multiplicative",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::AntipodeLeft => "antipode-left",
            Axiom::AntipodeRight => "antipode-right",
        };
        f.write_str(s)
    }
}

/// Pass/fail per axiom with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<(Axiom, Option<String>)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, w)| w.is_none())
    }

    pub fn first_failure(&self) -> Option<(Axiom, &str)> {
        self.results
            .iter()
            .find_map(|(a, w)| w.as_deref().map(|w| (*a, w)))
    }
}

/// Builds the Hopf algebra of a presentation.
pub fn build_hopf(p: &HopfPresentation, opts: &BuildOptions) -> Result<HopfAlgebra, BuildError> {
    let f = p.field.clone();
    let cap = opts
        .degree_cap
        .unwrap_or_else(|| default_degree_cap(&p.relations));
    let collapse = |reason, detail: String| BuildError::Collapse(CollapseReport { reason, detail });
    let (sys, status) = match complete(&p.alphabet, &f, &p.relations, cap) {
        Ok(x) => x,
        Err(RewriteError::Inconsistent) => {
            return Err(collapse(CollapseReason::ZeroRing, String::new()));
        }
    };
    if status == CompletionStatus::CapExceeded {
        return Err(BuildError::CapExceeded(cap));
    }
    let algebra = FinAlgebra::from_confluent(&sys, opts.basis_cap)?;
    if let Some(expected) = opts.expected_dim {
        if algebra.dim() != expected {
            return Err(collapse(
                CollapseReason::DimensionDrop {
                    expected,
                    got: algebra.dim(),
                },
                String::new(),
            ));
        }
    }
    let dim = algebra.dim();
    let generators: Vec<Vec<Fe>> = (0..p.alphabet.len())
        .map(|i| algebra.word_vec(&Word::letter(i)))
        .collect();

    // Comultiplication and counit of each generator.
    let t = algebra.tensor_square();
    let gen_delta: Vec<Sparse> = p
        .tags
        .iter()
        .enumerate()
        .map(|(i, tag)| match tag {
            GenTag::Grouplike => t.pure(&generators[i], &generators[i]),
            GenTag::SkewPrimitive(w) => {
                let wv = algebra.word_vec(w);
                let mut acc = to_dense(&t.pure(&generators[i], &algebra.unit()), dim * dim);
                sparse_add_scaled(&mut acc, &t.pure(&wv, &generators[i]), Fe::ONE, &f);
                crate::findim::to_sparse(&acc)
            }
        })
        .collect();
    let gen_counit: Vec<Fe> = p
        .tags
        .iter()
        .map(|t| if *t == GenTag::Grouplike { Fe::ONE } else { Fe::ZERO })
        .collect();

    let mut memo: HashMap<Word, Sparse> = HashMap::new();
    for (ri, r) in p.relations.iter().enumerate() {
        let mut acc = vec![Fe::ZERO; dim * dim];
        let mut eps = Fe::ZERO;
        for (w, c) in r.terms() {
            let d = delta_of_word(w, &gen_delta, &t, &mut memo);
            sparse_add_scaled(&mut acc, &d, c, &f);
            let e = w
                .letters()
                .iter()
                .fold(Fe::ONE, |a, &l| f.mul(a, gen_counit[l as usize]));
            eps = f.add(eps, f.mul(c, e));
        }
        if acc.iter().any(|x| !x.is_zero()) {
            return Err(collapse(
                CollapseReason::NonCoideal { relation: ri },
                p.alphabet.fmt_poly(r),
            ));
        }
        if !eps.is_zero() {
            return Err(collapse(
                CollapseReason::CounitNonzero { relation: ri },
                p.alphabet.fmt_poly(r),
            ));
        }
    }
    let delta: Vec<Sparse> = algebra
        .basis()
        .iter()
        .map(|w| delta_of_word(w, &gen_delta, &t, &mut memo))
        .collect();
    let counit: Vec<Fe> = algebra
        .basis()
        .iter()
        .map(|w| {
            w.letters()
                .iter()
                .fold(Fe::ONE, |a, &l| f.mul(a, gen_counit[l as usize]))
        })
        .collect();

    let mut h = HopfAlgebra {
        presentation: p.clone(),
        algebra,
        delta,
        counit,
        antipode: Matrix::zeros(dim, dim),
        generators,
    };
    match compute_antipode(&h) {
        Ok(s) => h.antipode = s,
        Err(e) => return Err(collapse(CollapseReason::AntipodeFailure, e.to_string())),
    }
    let report = check_axioms(&h);
    if let Some((axiom, witness)) = report.first_failure() {
        return Err(collapse(CollapseReason::Axiom(axiom), witness.to_string()));
    }
    Ok(h)
}

fn delta_of_word(
    w: &Word,
    gen_delta: &[Sparse],
    t: &TensorSquare<'_>,
    memo: &mut HashMap<Word, Sparse>,
) -> Sparse {
    if w.is_empty() {
        return t.unit();
    }
    if let Some(d) = memo.get(w) {
        return d.clone();
    }
    let prefix = w.slice(0, w.len() - 1);
    let last = w.letters()[w.len() - 1] as usize;
    let dp = delta_of_word(&prefix, gen_delta, t, memo);
    let d = t.mul(&dp, &gen_delta[last]);
    memo.insert(w.clone(), d.clone());
    d
}

/// The antipode: inverses on grouplike generators, `S(x) = -w⁻¹x` on
/// generators skew-primitive over `w`, extended as an anti-homomorphism to
/// the basis words. Both antipode identities are then verified, so an
/// `Ok` result is the unique convolution inverse of the identity.
pub fn compute_antipode(h: &HopfAlgebra) -> Result<Matrix, HopfError> {
    let a = &h.algebra;
    let f = a.field();
    let dim = a.dim();
    let p = &h.presentation;
    let mut gen_s: Vec<Vec<Fe>> = Vec::new();
    let mut inverses: Vec<Option<Vec<Fe>>> = vec![None; p.tags.len()];
    for (i, tag) in p.tags.iter().enumerate() {
        if *tag == GenTag::Grouplike {
            inverses[i] = Some(inverse_of_unit(a, &h.generators[i]).ok_or_else(|| {
                HopfError::NotHopf(format!("{} is not invertible", p.alphabet.name(i)))
            })?);
        }
    }
    for (i, tag) in p.tags.iter().enumerate() {
        let s = match tag {
            GenTag::Grouplike => inverses[i].clone().unwrap(),
            GenTag::SkewPrimitive(w) => {
                // w⁻¹ = product of letter inverses in reverse order.
                let mut winv = a.unit();
                for &l in w.letters() {
                    winv = a.mul(inverses[l as usize].as_ref().unwrap(), &winv);
                }
                let mut v = a.mul(&winv, &h.generators[i]);
                for x in v.iter_mut() {
                    *x = f.neg(*x);
                }
                v
            }
        };
        gen_s.push(s);
    }
    let mut memo: HashMap<Word, Vec<Fe>> = HashMap::new();
    let cols: Vec<Vec<Fe>> = a
        .basis()
        .iter()
        .map(|w| antipode_of_word(a, w, &gen_s, &mut memo))
        .collect();
    let s = Matrix::from_cols(dim, &cols);
    for (axiom, side) in [(Axiom::AntipodeLeft, true), (Axiom::AntipodeRight, false)] {
        if let Some(k) = antipode_witness(h, &s, side) {
            return Err(HopfError::NotHopf(format!(
                "{axiom} fails at {}",
                a.alphabet().fmt_word(&a.basis()[k])
            )));
        }
    }
    Ok(s)
}

fn antipode_of_word(
    a: &FinAlgebra,
    w: &Word,
    gen_s: &[Vec<Fe>],
    memo: &mut HashMap<Word, Vec<Fe>>,
) -> Vec<Fe> {
    if w.is_empty() {
        return a.unit();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let prefix = w.slice(0, w.len() - 1);
    let last = w.letters()[w.len() - 1] as usize;
    let sp = antipode_of_word(a, &prefix, gen_s, memo);
    let v = a.mul(&gen_s[last], &sp);
    memo.insert(w.clone(), v.clone());
    v
}

/// Inverse of `g` as a power of `g`, if `g` has finite order.
fn inverse_of_unit(a: &FinAlgebra, g: &[Fe]) -> Option<Vec<Fe>> {
    let unit = a.unit();
    let mut prev = unit.clone();
    let mut cur = g.to_vec();
    for _ in 0..=a.dim() + 1 {
        if cur == unit {
            return Some(prev);
        }
        prev = cur.clone();
        cur = a.mul(&cur, g);
    }
    None
}

/// First basis index where `m(S⊗id)Δ` (left) or `m(id⊗S)Δ` differs from `uε`.
fn antipode_witness(h: &HopfAlgebra, s: &Matrix, left: bool) -> Option<usize> {
    let a = &h.algebra;
    let f = a.field();
    let dim = a.dim();
    let s_cols: Vec<Vec<Fe>> = (0..dim).map(|i| s.col(i)).collect();
    for k in 0..dim {
        let mut acc = vec![Fe::ZERO; dim];
        for &(ij, c) in &h.delta[k] {
            let (i, j) = (ij as usize / dim, ij as usize % dim);
            let prod = if left {
                a.mul(&s_cols[i], &a.basis_vec(j))
            } else {
                a.mul(&a.basis_vec(i), &s_cols[j])
            };
            axpy(&mut acc, c, &prod, f);
        }
        let mut expect = vec![Fe::ZERO; dim];
        expect[0] = h.counit[k];
        if acc != expect {
            return Some(k);
        }
    }
    None
}

/// The convolution inverse of the identity by a dense linear solve in the
/// `dim²` entries of `S`. Intended for small algebras as an independent
/// check of [`compute_antipode`].
pub fn convolution_inverse_solve(h: &HopfAlgebra) -> Result<Matrix, HopfError> {
    let a = &h.algebra;
    let f = a.field();
    let dim = a.dim();
    // Unknown s[l][i] (coefficient of e_l in S(e_i)) at column l * dim + i.
    // Equation (k, m): coefficient of e_m in Σ c_ij S(e_i) e_j = ε(e_k) δ_{m,0}.
    let mut m = Matrix::zeros(dim * dim, dim * dim);
    let mut rhs = vec![Fe::ZERO; dim * dim];
    for k in 0..dim {
        for &(ij, c) in &h.delta[k] {
            let (i, j) = (ij as usize / dim, ij as usize % dim);
            for l in 0..dim {
                for &(mm, v) in a.mul_basis(l, j) {
                    let row = k * dim + mm as usize;
                    let col = l * dim + i;
                    let cur = m.get(row, col);
                    m.set(row, col, f.add(cur, f.mul(c, v)));
                }
            }
        }
        rhs[k * dim] = h.counit[k];
    }
    let x = solve(&m, &rhs, f)
        .ok_or_else(|| HopfError::NotHopf("convolution equation has no solution".into()))?;
    let mut s = Matrix::zeros(dim, dim);
    for l in 0..dim {
        for i in 0..dim {
            s.set(l, i, x[l * dim + i]);
        }
    }
    Ok(s)
}

/// Runs the six axiom checks on the stored structure maps.
pub fn check_axioms(h: &HopfAlgebra) -> AxiomReport {
    let a = &h.algebra;
    let names = |k: usize| a.alphabet().fmt_word(&a.basis()[k]);
    let pair = |i: usize, j: usize| format!("{} * {}", names(i), names(j));
    let results = vec![
        (Axiom::Coassociativity, coassoc_witness(h).map(names)),
        (Axiom::Counit, counit_witness(h).map(names)),
        (
            Axiom::DeltaMultiplicative,
            delta_mult_witness(h).map(|(i, j)| pair(i, j)),
        ),
        (
            Axiom::CounitMultiplicative,
            counit_mult_witness(h).map(|(i, j)| pair(i, j)),
        ),
        (
            Axiom::AntipodeLeft,
            antipode_witness(h, &h.antipode, true).map(names),
        ),
        (
            Axiom::AntipodeRight,
            antipode_witness(h, &h.antipode, false).map(names),
        ),
    ];
    AxiomReport { results }
}

fn coassoc_witness(h: &HopfAlgebra) -> Option<usize> {
    let dim = h.algebra.dim();
    let f = h.algebra.field();
    for k in 0..dim {
        let mut left: BTreeMap<(u32, u32, u32), Fe> = BTreeMap::new();
        let mut right: BTreeMap<(u32, u32, u32), Fe> = BTreeMap::new();
        let add = |m: &mut BTreeMap<(u32, u32, u32), Fe>, key, c: Fe| {
            let e = m.entry(key).or_insert(Fe::ZERO);
            *e = f.add(*e, c);
        };
        for &(ij, c) in &h.delta[k] {
            let (i, j) = (ij / dim as u32, ij % dim as u32);
            for &(ab, d) in &h.delta[i as usize] {
                let (x, y) = (ab / dim as u32, ab % dim as u32);
                add(&mut left, (x, y, j), f.mul(c, d));
            }
            for &(ab, d) in &h.delta[j as usize] {
                let (x, y) = (ab / dim as u32, ab % dim as u32);
                add(&mut right, (i, x, y), f.mul(c, d));
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        if left != right {
            return Some(k);
        }
    }
    None
}

fn counit_witness(h: &HopfAlgebra) -> Option<usize> {
    let dim = h.algebra.dim();
    let f = h.algebra.field();
    for k in 0..dim {
        let mut left = vec![Fe::ZERO; dim];
        let mut right = vec![Fe::ZERO; dim];
        for &(ij, c) in &h.delta[k] {
            let (i, j) = (ij as usize / dim, ij as usize % dim);
            left[j] = f.add(left[j], f.mul(c, h.counit[i]));
            right[i] = f.add(right[i], f.mul(c, h.counit[j]));
        }
        let e = h.algebra.basis_vec(k);
        if left != e || right != e {
            return Some(k);
        }
    }
    None
}

fn delta_mult_witness(h: &HopfAlgebra) -> Option<(usize, usize)> {
    let a = &h.algebra;
    let dim = a.dim();
    let f = a.field();
    let t = a.tensor_square();
    if h.delta[0] != t.unit() {
        return Some((0, 0));
    }
    for i in 0..dim {
        for j in 0..dim {
            let mut lhs = vec![Fe::ZERO; dim * dim];
            for &(m, c) in a.mul_basis(i, j) {
                sparse_add_scaled(&mut lhs, &h.delta[m as usize], c, f);
            }
            let rhs = to_dense(&t.mul(&h.delta[i], &h.delta[j]), dim * dim);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

fn counit_mult_witness(h: &HopfAlgebra) -> Option<(usize, usize)> {
    let a = &h.algebra;
    let f = a.field();
    if h.counit[0] != Fe::ONE {
        return Some((0, 0));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = a
                .mul_basis(i, j)
                .iter()
                .fold(Fe::ZERO, |acc, &(m, c)| f.add(acc, f.mul(c, h.counit[m as usize])));
            if lhs != f.mul(h.counit[i], h.counit[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

impl HopfAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    /// `Δ` as a `dim² × dim` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim * dim, dim);
        for (k, d) in self.delta.iter().enumerate() {
            for &(ij, c) in d {
                m.set(ij as usize, k, c);
            }
        }
        m
    }

    /// `Δ(v)` as a dense vector of length `dim²`.
    pub fn delta_of(&self, v: &[Fe]) -> Vec<Fe> {
        let dim = self.dim();
        let mut acc = vec![Fe::ZERO; dim * dim];
        for (k, &c) in v.iter().enumerate() {
            sparse_add_scaled(&mut acc, &self.delta[k], c, self.field());
        }
        acc
    }

    pub fn counit_of(&self, v: &[Fe]) -> Fe {
        let f = self.field();
        v.iter()
            .zip(&self.counit)
            .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    pub fn antipode_of(&self, v: &[Fe]) -> Vec<Fe> {
        self.antipode.mul_vec(v, self.field())
    }

    /// Dense `a ⊗ b`.
    pub fn tensor(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let f = self.field();
        let dim = self.dim();
        let mut out = vec![Fe::ZERO; dim * dim];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i * dim + j] = f.mul(x, y);
            }
        }
        out
    }

    pub fn is_grouplike(&self, v: &[Fe]) -> bool {
        self.counit_of(v) == Fe::ONE && self.delta_of(v) == self.tensor(v, v)
    }

    /// Basis of `P_{g,h} = {c : Δc = c⊗g + h⊗c}`.
    pub fn skew_primitive_space(&self, g: &[Fe], h: &[Fe]) -> Result<Vec<Vec<Fe>>, HopfError> {
        if !self.is_grouplike(g) || !self.is_grouplike(h) {
            return Err(HopfError::NotGrouplike);
        }
        let f = self.field();
        let dim = self.dim();
        let minus = f.neg(Fe::ONE);
        let cols: Vec<Vec<Fe>> = (0..dim)
            .map(|i| {
                let e = self.algebra.basis_vec(i);
                let mut c = to_dense(&self.delta[i], dim * dim);
                axpy(&mut c, minus, &self.tensor(&e, g), f);
                axpy(&mut c, minus, &self.tensor(h, &e), f);
                c
            })
            .collect();
        let m = Matrix::from_cols(dim * dim, &cols);
        Ok(rank_nullspace(&m, f).1)
    }

    /// The group generated by the grouplike generators, as coordinate
    /// vectors in breadth-first order from the unit.
    pub fn group_elements(&self) -> Vec<Vec<Fe>> {
        let gens: Vec<&Vec<Fe>> = self
            .presentation
            .grouplike_generators()
            .into_iter()
            .map(|i| &self.generators[i])
            .collect();
        let mut out = vec![self.algebra.unit()];
        let mut i = 0;
        while i < out.len() {
            for g in &gens {
                let v = self.algebra.mul(&out[i], g);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
            i += 1;
        }
        out
    }

    /// Checks the given elements for being group-like.
    pub fn verify_grouplikes(&self, elems: &[Vec<Fe>]) -> Vec<bool> {
        elems.iter().map(|v| self.is_grouplike(v)).collect()
    }

    /// Every group-like element, by exhaustive scan of `F^dim`.
    pub fn enumerate_grouplikes(&self, budget: u64) -> Result<Vec<Vec<Fe>>, HopfError> {
        let f = self.field();
        let q = f.order() as u64;
        let dim = self.dim();
        let needed = (q as f64).powi(dim as i32);
        if needed > budget as f64 {
            return Err(HopfError::Budget { needed, budget });
        }
        let total = q.pow(dim as u32);
        let mut out = Vec::new();
        let mut v = vec![Fe::ZERO; dim];
        for code in 0..total {
            let mut c = code;
            for x in v.iter_mut() {
                *x = Fe((c % q) as u16);
                c /= q;
            }
            if self.counit_of(&v) != Fe::ONE {
                continue;
            }
            if self.delta_of(&v) == self.tensor(&v, &v) {
                out.push(v.clone());
            }
        }
        Ok(out)
    }

    /// Span of the group elements and all `P_{a,b}` for group elements `a, b`.
    pub fn first_term_span(&self) -> Echelon {
        let f = self.field();
        let group = self.group_elements();
        let mut span = Echelon::new(self.dim());
        for g in &group {
            span.insert(g, f);
        }
        for a in &group {
            for b in &group {
                for v in self.skew_primitive_space(a, b).expect("group elements are group-like") {
                    span.insert(&v, f);
                }
            }
        }
        span
    }
}
