//! Exhaustive isomorphism search between presented Hopf algebras.
//!
//! Grouplike generators are sent to elements of the group of group-likes
//! of the target, skew-primitive generators over `w` to arbitrary vectors of
//! `P_{1,φ(w)}` of the target. A candidate is kept when it annihilates every
//! relation, is injective on the span of group-likes and skew-primitives,
//! and its image generates the whole target.

use thiserror::Error;

use super::{GenTag, HopfAlgebra};
use crate::freealg::Word;
use crate::gf::{rank, Fe, Matrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IsoError {
    #[error("search visited more than {0} candidates")]
    Budget(u64),
    #[error("fields differ")]
    FieldMismatch,
}

#[derive(Clone, Debug)]
pub struct IsoOptions {
    /// Maximum number of partial assignments visited.
    pub budget: u64,
    /// Return after the first isomorphism.
    pub first_only: bool,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            budget: 50_000_000,
            first_only: false,
        }
    }
}

/// An isomorphism given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphism {
    /// `images[i]` is the coordinate vector of `φ(generator i)` in the target.
    pub images: Vec<Vec<Fe>>,
    /// Matrix of `φ` on basis words, column `i` = `φ(e_i)`.
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn describe(&self, source: &HopfAlgebra, target: &HopfAlgebra) -> String {
        let a = source.presentation.alphabet.clone();
        self.images
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{} -> {}", a.name(i), target.algebra.fmt_vec(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

struct Search<'a> {
    h1: &'a HopfAlgebra,
    h2: &'a HopfAlgebra,
    opts: &'a IsoOptions,
    /// Generator indices in assignment order: grouplikes first.
    order: Vec<usize>,
    /// Relations to test once step `s` is assigned.
    checks: Vec<Vec<usize>>,
    group2: Vec<Vec<Fe>>,
    c1_basis: Vec<Vec<Fe>>,
    images: Vec<Vec<Fe>>,
    visited: u64,
    found: Vec<HopfMorphism>,
}

/// All isomorphisms `h1 → h2`.
pub fn iso_search(
    h1: &HopfAlgebra,
    h2: &HopfAlgebra,
    opts: &IsoOptions,
) -> Result<Vec<HopfMorphism>, IsoError> {
    if h1.field() != h2.field() {
        return Err(IsoError::FieldMismatch);
    }
    if h1.dim() != h2.dim() {
        return Ok(Vec::new());
    }
    let p1 = &h1.presentation;
    let mut order = p1.grouplike_generators();
    order.extend(p1.skew_generators());
    let step_of: Vec<usize> = {
        let mut s = vec![0; order.len()];
        for (step, &g) in order.iter().enumerate() {
            s[g] = step;
        }
        s
    };
    let mut checks = vec![Vec::new(); order.len()];
    for (ri, r) in p1.relations.iter().enumerate() {
        let last = r
            .letters()
            .iter()
            .map(|&l| step_of[l as usize])
            .max()
            .unwrap_or(0);
        checks[last].push(ri);
    }
    let group1 = h1.group_elements();
    let group2 = h2.group_elements();
    if group1.len() != group2.len() {
        return Ok(Vec::new());
    }
    let mut s = Search {
        h1,
        h2,
        opts,
        order,
        checks,
        group2,
        c1_basis: h1.first_term_span().basis().to_vec(),
        images: vec![vec![Fe::ZERO; h2.dim()]; p1.alphabet.len()],
        visited: 0,
        found: Vec::new(),
    };
    s.descend(0)?;
    Ok(s.found)
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.opts.first_only && !self.found.is_empty()
    }

    fn descend(&mut self, step: usize) -> Result<(), IsoError> {
        if step == self.order.len() {
            self.finish();
            return Ok(());
        }
        let gen = self.order[step];
        let candidates: Vec<Vec<Fe>> = match &self.h1.presentation.tags[gen] {
            GenTag::Grouplike => self.group2.clone(),
            GenTag::SkewPrimitive(w) => self.skew_candidates(w, gen),
        };
        for c in candidates {
            self.visited += 1;
            if self.visited > self.opts.budget {
                return Err(IsoError::Budget(self.opts.budget));
            }
            self.images[gen] = c;
            if self.relations_hold(step) {
                self.descend(step + 1)?;
                if self.done() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn skew_candidates(&self, w: &Word, gen: usize) -> Vec<Vec<Fe>> {
        let a2 = &self.h2.algebra;
        let f = a2.field();
        let mut target = a2.unit();
        for &l in w.letters() {
            target = a2.mul(&target, &self.images[l as usize]);
        }
        let space = self
            .h2
            .skew_primitive_space(&a2.unit(), &target)
            .expect("images of grouplikes are group-like");
        let q = f.order() as u64;
        let d = space.len() as u32;
        let nonzero_source = self.h1.generators[gen].iter().any(|c| !c.is_zero());
        let mut out = Vec::new();
        for code in 0..q.pow(d) {
            if code == 0 && nonzero_source {
                continue;
            }
            let mut v = vec![Fe::ZERO; a2.dim()];
            let mut c = code;
            for b in &space {
                crate::gf::axpy(&mut v, Fe((c % q) as u16), b, f);
                c /= q;
            }
            out.push(v);
        }
        out
    }

    fn relations_hold(&self, step: usize) -> bool {
        self.checks[step].iter().all(|&ri| {
            let r = &self.h1.presentation.relations[ri];
            self.h2
                .algebra
                .eval(r, &self.images)
                .iter()
                .all(|c| c.is_zero())
        })
    }

    fn finish(&mut self) {
        let a1 = &self.h1.algebra;
        let a2 = &self.h2.algebra;
        let f = a2.field();
        let dim = a2.dim();
        let cols: Vec<Vec<Fe>> = a1
            .basis()
            .iter()
            .map(|w| a2.eval(&crate::freealg::NcPoly::word(w.clone()), &self.images))
            .collect();
        let phi = Matrix::from_cols(dim, &cols);
        if !self.c1_basis.is_empty() {
            let c1_images: Vec<Vec<Fe>> =
                self.c1_basis.iter().map(|v| phi.mul_vec(v, f)).collect();
            let m = Matrix::from_cols(dim, &c1_images);
            if rank(&m, f) != self.c1_basis.len() {
                return;
            }
        }
        if a2.generated_subspace_dim(&self.images) != dim {
            return;
        }
        debug_assert_eq!(rank(&phi, f), dim);
        self.found.push(HopfMorphism {
            images: self.images.clone(),
            matrix: phi,
        });
    }
}
