//! Finite-dimensional quotient algebras with explicit structure constants.

use std::collections::HashMap;

use thiserror::Error;

use crate::freealg::{Alphabet, NcPoly, Word};
use crate::gf::{axpy, Echelon, Fe, Field};
use crate::rewrite::RewriteSystem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinError {
    #[error("irreducible words do not close below {cap}: infinite or too large basis")]
    InfiniteBasis { cap: usize },
    #[error("vector length {got} does not match dimension {dim}")]
    DimensionMismatch { got: usize, dim: usize },
}

/// Sparse vector: sorted `(index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(u32, Fe)>;

pub fn to_sparse(v: &[Fe]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (i as u32, c))
        .collect()
}

pub fn to_dense(s: &Sparse, n: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    for &(i, c) in s {
        v[i as usize] = c;
    }
    v
}

/// A finite-dimensional algebra on a basis of irreducible words.
#[derive(Clone, Debug)]
pub struct FinAlgebra {
    system: RewriteSystem,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `mult[i * dim + j]` is the product of basis elements `i` and `j`.
    mult: Vec<Sparse>,
}

impl FinAlgebra {
    /// Materializes the quotient of a confluent system. `cap` bounds the
    /// basis enumeration.
    pub fn from_confluent(sys: &RewriteSystem, cap: usize) -> Result<FinAlgebra, FinError> {
        let (basis, finite) = sys.enumerate_basis(cap);
        if !finite {
            return Err(FinError::InfiniteBasis { cap });
        }
        let index: HashMap<Word, usize> =
            basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let dim = basis.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for a in &basis {
            for b in &basis {
                let p = sys.normal_form_word(&a.concat(b));
                let mut s: Sparse = p
                    .terms()
                    .map(|(w, c)| (index[w] as u32, c))
                    .collect();
                s.sort_unstable_by_key(|t| t.0);
                mult.push(s);
            }
        }
        Ok(FinAlgebra {
            system: sys.clone(),
            basis,
            index,
            mult,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &Field {
        self.system.field()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Product of basis elements `i` and `j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim() + j]
    }

    pub fn unit(&self) -> Vec<Fe> {
        self.basis_vec(0)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.dim()];
        v[i] = Fe::ONE;
        v
    }

    /// Coordinates of the class of `p`.
    pub fn coords(&self, p: &NcPoly) -> Vec<Fe> {
        let nf = self.system.normal_form(p);
        let mut v = vec![Fe::ZERO; self.dim()];
        for (w, c) in nf.terms() {
            v[self.index[w]] = c;
        }
        v
    }

    pub fn word_vec(&self, w: &Word) -> Vec<Fe> {
        self.coords(&NcPoly::word(w.clone()))
    }

    /// The polynomial whose class has coordinates `v`.
    pub fn to_poly(&self, v: &[Fe]) -> NcPoly {
        let f = self.field();
        let mut p = NcPoly::zero();
        for (i, &c) in v.iter().enumerate() {
            p.add_term(self.basis[i].clone(), c, f);
        }
        p
    }

    pub fn fmt_vec(&self, v: &[Fe]) -> String {
        self.alphabet().fmt_poly(&self.to_poly(v))
    }

    pub fn mult_element(&self, a: &[Fe], b: &[Fe]) -> Result<Vec<Fe>, FinError> {
        let dim = self.dim();
        for v in [a, b] {
            if v.len() != dim {
                return Err(FinError::DimensionMismatch { got: v.len(), dim });
            }
        }
        Ok(self.mul(a, b))
    }

    /// Product of coordinate vectors (lengths must equal `dim`).
    pub fn mul(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let f = self.field();
        let dim = self.dim();
        let mut out = vec![Fe::ZERO; dim];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = f.mul(x, y);
                for &(k, m) in &self.mult[i * dim + j] {
                    let o = &mut out[k as usize];
                    *o = f.add(*o, f.mul(c, m));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Fe], n: usize) -> Vec<Fe> {
        let mut out = self.unit();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn commutator(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let f = self.field();
        let mut ab = self.mul(a, b);
        let ba = self.mul(b, a);
        axpy(&mut ab, f.neg(Fe::ONE), &ba, f);
        ab
    }

    /// Evaluates `p` with generator `i` replaced by `images[i]`.
    pub fn eval(&self, p: &NcPoly, images: &[Vec<Fe>]) -> Vec<Fe> {
        let f = self.field();
        let mut out = vec![Fe::ZERO; self.dim()];
        let mut cache: HashMap<Word, Vec<Fe>> = HashMap::new();
        for (w, c) in p.terms() {
            let v = self.eval_word(w, images, &mut cache);
            axpy(&mut out, c, &v, f);
        }
        out
    }

    fn eval_word(
        &self,
        w: &Word,
        images: &[Vec<Fe>],
        cache: &mut HashMap<Word, Vec<Fe>>,
    ) -> Vec<Fe> {
        if w.is_empty() {
            return self.unit();
        }
        if let Some(v) = cache.get(w) {
            return v.clone();
        }
        let prefix = w.slice(0, w.len() - 1);
        let last = w.letters()[w.len() - 1] as usize;
        let pv = self.eval_word(&prefix, images, cache);
        let v = self.mul(&pv, &images[last]);
        cache.insert(w.clone(), v.clone());
        v
    }

    /// First basis triple violating associativity, if any.
    pub fn check_associative(&self) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        let f = self.field();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut left = vec![Fe::ZERO; dim];
                    for &(m, c) in self.mul_basis(i, j) {
                        sparse_add_scaled(&mut left, self.mul_basis(m as usize, k), c, f);
                    }
                    let mut right = vec![Fe::ZERO; dim];
                    for &(m, c) in self.mul_basis(j, k) {
                        sparse_add_scaled(&mut right, self.mul_basis(i, m as usize), c, f);
                    }
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Dimension of the unital subalgebra generated by `gens`.
    pub fn generated_subspace_dim(&self, gens: &[Vec<Fe>]) -> usize {
        self.generated_subspace(gens).dim()
    }

    pub fn generated_subspace(&self, gens: &[Vec<Fe>]) -> Echelon {
        let f = self.field();
        let mut span = Echelon::new(self.dim());
        let mut frontier = vec![self.unit()];
        span.insert(&self.unit(), f);
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w = self.mul(&v, g);
                if span.insert(&w, f) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    pub fn tensor_square(&self) -> TensorSquare<'_> {
        TensorSquare { base: self }
    }
}

/// `A ⊗ A` on the basis of ordered pairs `(i, j)` at index `i * dim + j`.
#[derive(Clone, Copy)]
pub struct TensorSquare<'a> {
    base: &'a FinAlgebra,
}

impl TensorSquare<'_> {
    pub fn dim(&self) -> usize {
        self.base.dim() * self.base.dim()
    }

    pub fn unit(&self) -> Sparse {
        vec![(0, Fe::ONE)]
    }

    /// `a ⊗ b` for coordinate vectors of the base algebra.
    pub fn pure(&self, a: &[Fe], b: &[Fe]) -> Sparse {
        let f = self.base.field();
        let n = self.base.dim();
        let mut out = Vec::new();
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out.push(((i * n + j) as u32, f.mul(x, y)));
                }
            }
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`, extended bilinearly.
    pub fn mul(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let f = self.base.field();
        let n = self.base.dim();
        let mut acc = vec![Fe::ZERO; n * n];
        for &(ab, x) in a {
            let (a1, a2) = (ab as usize / n, ab as usize % n);
            for &(cd, y) in b {
                let (c1, c2) = (cd as usize / n, cd as usize % n);
                let xy = f.mul(x, y);
                let left = self.base.mul_basis(a1, c1);
                let right = self.base.mul_basis(a2, c2);
                for &(k, u) in left {
                    let ku = f.mul(xy, u);
                    for &(l, v) in right {
                        let o = &mut acc[k as usize * n + l as usize];
                        *o = f.add(*o, f.mul(ku, v));
                    }
                }
            }
        }
        to_sparse(&acc)
    }
}

pub fn sparse_add_scaled(acc: &mut Vec<Fe>, s: &Sparse, c: Fe, f: &Field) {
    if c.is_zero() {
        return;
    }
    for &(i, x) in s {
        let o = &mut acc[i as usize];
        *o = f.add(*o, f.mul(c, x));
    }
}
