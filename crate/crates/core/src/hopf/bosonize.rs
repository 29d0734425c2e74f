//! Smash-product presentations `B ♯ kG` from Yetter-Drinfeld data.
//!
//! The module `V` has a homogeneous basis: each basis vector carries a
//! degree (a word in the group generators) and each group generator acts
//! by a matrix. The resulting presentation has the group generators as
//! grouplikes, the basis of `V` as skew-primitives over their degrees, the
//! commutation rules `g v = (g·v) g`, and the supplied relations of `B`.

use thiserror::Error;

use super::{parse_tag, GenTag, HopfAlgebra, HopfPresentation, PresentationError};
use crate::findim::{FinAlgebra, FinError};
use crate::freealg::{parse_poly, Alphabet, PolyEnv, Word};
use crate::gf::{rank_nullspace, Fe, Field, Matrix};
use crate::rewrite::{complete, default_degree_cap, CompletionStatus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BosonizeError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Group(#[from] FinError),
    #[error("group relations do not define a finite group")]
    BadGroup,
    #[error("action does not satisfy group relation {0}")]
    NotRepresentation(usize),
    #[error("Yetter-Drinfeld compatibility fails for {gen} on {vector}")]
    Compatibility { gen: String, vector: String },
    #[error("action matrix of {0} has the wrong shape")]
    Shape(String),
}

/// A finite group by generators and relations (relations as text).
#[derive(Clone, Debug)]
pub struct GroupData {
    pub names: Vec<String>,
    pub relations: Vec<String>,
}

/// A Yetter-Drinfeld module with homogeneous basis.
#[derive(Clone, Debug)]
pub struct YdData {
    pub names: Vec<String>,
    /// One `m × m` matrix per group generator; column `j` is `g·v_j`.
    pub action: Vec<Matrix>,
    /// Degree of each basis vector, as a word in the group generators.
    pub degrees: Vec<String>,
}

impl GroupData {
    /// The group algebra over `f`.
    pub fn algebra(&self, f: &Field) -> Result<FinAlgebra, BosonizeError> {
        let a = Alphabet::new(&self.names).map_err(PresentationError::from)?;
        let env = PolyEnv {
            integer_literals: true,
            ..Default::default()
        };
        let rels = self
            .relations
            .iter()
            .map(|r| parse_poly(r, &a, &env, f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(PresentationError::from)?;
        let (sys, status) =
            complete(&a, f, &rels, default_degree_cap(&rels)).map_err(|_| BosonizeError::BadGroup)?;
        if status != CompletionStatus::Confluent {
            return Err(BosonizeError::BadGroup);
        }
        Ok(FinAlgebra::from_confluent(&sys, 1 << 12)?)
    }
}

/// Builds the presentation of `B(V) ♯ kG`. `nichols_relations` are written
/// in the basis names of `V`. Basis names of `V` precede the group
/// generators in the monomial order.
pub fn bosonize(
    f: &Field,
    group: &GroupData,
    yd: &YdData,
    nichols_relations: &[String],
) -> Result<HopfPresentation, BosonizeError> {
    let m = yd.names.len();
    let ng = group.names.len();
    if yd.action.len() != ng || yd.degrees.len() != m {
        return Err(BosonizeError::Shape("module".into()));
    }
    for (g, a) in group.names.iter().zip(&yd.action) {
        if a.rows != m || a.cols != m {
            return Err(BosonizeError::Shape(g.clone()));
        }
    }
    let ga = group.algebra(f)?;
    let galpha = ga.alphabet().clone();
    let env = PolyEnv {
        integer_literals: true,
        ..Default::default()
    };

    // The action must be a representation of the group.
    for (ri, r) in ga.system().rules().iter().enumerate() {
        let poly = r.as_poly(f);
        let mut acc = Matrix::zeros(m, m);
        for (w, c) in poly.terms() {
            let mut prod = Matrix::identity(m);
            for &l in w.letters() {
                prod = prod.mul(&yd.action[l as usize], f);
            }
            for i in 0..m {
                for j in 0..m {
                    let v = f.add(acc.get(i, j), f.mul(c, prod.get(i, j)));
                    acc.set(i, j, v);
                }
            }
        }
        if !acc.is_zero() {
            return Err(BosonizeError::NotRepresentation(ri));
        }
    }

    // Compatibility: deg(g·v_j) g = g deg(v_j) componentwise.
    let degs: Vec<Vec<Fe>> = yd
        .degrees
        .iter()
        .map(|d| {
            let GenTag::SkewPrimitive(w) = parse_tag(&format!("skewprim {d}"), &galpha, &env)?
            else {
                unreachable!()
            };
            Ok(ga.word_vec(&w))
        })
        .collect::<Result<_, BosonizeError>>()?;
    for (t, a) in yd.action.iter().enumerate() {
        let g = ga.word_vec(&Word::letter(t));
        for j in 0..m {
            for i in 0..m {
                if a.get(i, j).is_zero() {
                    continue;
                }
                if ga.mul(&degs[i], &g) != ga.mul(&g, &degs[j]) {
                    return Err(BosonizeError::Compatibility {
                        gen: group.names[t].clone(),
                        vector: yd.names[j].clone(),
                    });
                }
            }
        }
    }

    let mut gens: Vec<(String, String)> = yd
        .names
        .iter()
        .zip(&yd.degrees)
        .map(|(n, d)| (n.clone(), format!("skewprim {d}")))
        .collect();
    gens.extend(group.names.iter().map(|n| (n.clone(), "grouplike".into())));
    let mut relations: Vec<String> = group.relations.clone();
    relations.extend(nichols_relations.iter().cloned());
    for (t, g) in group.names.iter().enumerate() {
        for (j, v) in yd.names.iter().enumerate() {
            let image: Vec<String> = (0..m)
                .filter(|&i| !yd.action[t].get(i, j).is_zero())
                .map(|i| format!("{}*{}", yd.action[t].get(i, j).0, yd.names[i]))
                .collect();
            relations.push(format!("{g}{v} - ({}){g}", image.join(" + ")));
        }
    }
    // Coefficients of the action are element encodings; the other relations
    // use integer literals, so encode the commutation rules separately.
    let order: Vec<String> = gens.iter().map(|(n, _)| n.clone()).collect();
    let base = HopfPresentation::from_text(
        f.clone(),
        &gens,
        Some(&order),
        &relations[..relations.len() - ng * m],
        &env,
    )?;
    let elem_env = PolyEnv::default();
    let mut rels = base.relations.clone();
    for text in &relations[relations.len() - ng * m..] {
        let text = text.replace("()", "0");
        rels.push(
            parse_poly(&text, &base.alphabet, &elem_env, f).map_err(PresentationError::from)?,
        );
    }
    Ok(HopfPresentation::new(
        f.clone(),
        base.alphabet.clone(),
        base.tags.clone(),
        rels,
    )?)
}

impl HopfAlgebra {
    /// The projection onto the group part: words containing a
    /// skew-primitive letter map to zero, column `i` is `π(e_i)`.
    pub fn group_projection(&self) -> Matrix {
        let dim = self.dim();
        let skew = self.presentation.skew_generators();
        let cols: Vec<Vec<Fe>> = (0..dim)
            .map(|i| {
                let w = &self.algebra.basis()[i];
                if w.letters().iter().any(|l| skew.contains(&(*l as usize))) {
                    vec![Fe::ZERO; dim]
                } else {
                    self.algebra.basis_vec(i)
                }
            })
            .collect();
        Matrix::from_cols(dim, &cols)
    }

    /// Whether the group projection is multiplicative on basis elements.
    pub fn projection_is_algebra_map(&self) -> bool {
        let f = self.field();
        let pi = self.group_projection();
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let prod = crate::findim::to_dense(self.algebra.mul_basis(i, j), dim);
                let lhs = pi.mul_vec(&prod, f);
                let rhs = self.algebra.mul(&pi.col(i), &pi.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Dimension of the right coinvariants `{v : (id⊗π)Δv = v⊗1}`.
    pub fn coinvariant_dim(&self) -> usize {
        let f = self.field();
        let dim = self.dim();
        let pi = self.group_projection();
        let minus = f.neg(Fe::ONE);
        let cols: Vec<Vec<Fe>> = (0..dim)
            .map(|k| {
                let mut c = vec![Fe::ZERO; dim * dim];
                for &(ij, x) in &self.delta[k] {
                    let (i, j) = (ij as usize / dim, ij as usize % dim);
                    for (l, &y) in pi.col(j).iter().enumerate() {
                        if !y.is_zero() {
                            let o = &mut c[i * dim + l];
                            *o = f.add(*o, f.mul(x, y));
                        }
                    }
                }
                let o = &mut c[k * dim];
                *o = f.add(*o, minus);
                c
            })
            .collect();
        rank_nullspace(&Matrix::from_cols(dim * dim, &cols), f).1.len()
    }
}
