//! Hopf structure on presented algebras.
//!
//! A [`HopfPresentation`] lists generators with coalgebra tags: grouplike
//! (`Δg = g⊗g`) or skew-primitive over a word `w` in grouplike generators
//! (`Δx = x⊗1 + w⊗x`). Building it completes the relations, materializes
//! the algebra and checks that comultiplication, counit and antipode
//! descend to the quotient.
//!
//! Grouplike generators get weight 0 in the monomial order and all others
//! weight 1, so relations such as `gx - xg - g(1 - g^2)` are led by `gx`.

mod bosonize;
mod build;
mod format;
mod iso;

use thiserror::Error;

use crate::freealg::{parse_poly, AlgError, Alphabet, NcPoly, PolyEnv, Word};
use crate::gf::Field;

pub use bosonize::{bosonize, BosonizeError, GroupData, YdData};
pub use build::{
    build_hopf, check_axioms, compute_antipode, convolution_inverse_solve, Axiom, AxiomReport,
    BuildError, BuildOptions, CollapseReason, CollapseReport, HopfAlgebra, HopfError,
};
pub use format::{PresentationFile, FormatError};
pub use iso::{iso_search, IsoOptions, HopfMorphism, IsoError};

/// Coalgebra tag of a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenTag {
    Grouplike,
    /// `Δx = x⊗1 + w⊗x`; the empty word means primitive.
    SkewPrimitive(Word),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("tag of {gen:?} must be a word in grouplike generators, got {tag:?}")]
    BadTag { gen: char, tag: String },
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error("generator {0:?} missing from the precedence order")]
    Order(String),
    #[error("relation {index} ({text:?}): {source}")]
    Relation {
        index: usize,
        text: String,
        source: AlgError,
    },
}

/// Generators, coalgebra tags and relations over a field.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub field: Field,
    /// Generators in ascending precedence, weighted by tag.
    pub alphabet: Alphabet,
    pub tags: Vec<GenTag>,
    pub relations: Vec<NcPoly>,
}

impl HopfPresentation {
    /// Validates tags and installs order weights.
    pub fn new(
        field: Field,
        alphabet: Alphabet,
        tags: Vec<GenTag>,
        relations: Vec<NcPoly>,
    ) -> Result<Self, PresentationError> {
        assert_eq!(alphabet.len(), tags.len());
        for (i, t) in tags.iter().enumerate() {
            if let GenTag::SkewPrimitive(w) = t {
                if w.letters().iter().any(|&l| tags[l as usize] != GenTag::Grouplike) {
                    return Err(PresentationError::BadTag {
                        gen: alphabet.name(i),
                        tag: alphabet.fmt_word(w),
                    });
                }
            }
        }
        let weights = tags
            .iter()
            .map(|t| u32::from(*t != GenTag::Grouplike))
            .collect();
        Ok(HopfPresentation {
            field,
            alphabet: alphabet.with_weights(weights),
            tags,
            relations,
        })
    }

    /// Builds a presentation from text.
    ///
    /// `generators` pairs names with tags (`grouplike`, `primitive`,
    /// `skewprim <word>` or `skewprim over <word>`). `order` lists names in
    /// ascending precedence; by default the listed order is used, last
    /// generator largest.
    pub fn from_text(
        field: Field,
        generators: &[(String, String)],
        order: Option<&[String]>,
        relations: &[String],
        env: &PolyEnv,
    ) -> Result<Self, PresentationError> {
        let names: Vec<String> = match order {
            Some(o) => {
                for (g, _) in generators {
                    if !o.contains(g) {
                        return Err(PresentationError::Order(g.clone()));
                    }
                }
                if o.len() != generators.len() {
                    return Err(PresentationError::Order(o.join(",")));
                }
                o.to_vec()
            }
            None => generators.iter().map(|(n, _)| n.clone()).collect(),
        };
        let alphabet = Alphabet::new(&names)?;
        let mut tags = Vec::new();
        for name in &names {
            let (_, tag) = generators.iter().find(|(n, _)| n == name).unwrap();
            tags.push(parse_tag(tag, &alphabet, env)?);
        }
        let mut rels = Vec::new();
        for (index, text) in relations.iter().enumerate() {
            let r = parse_poly(text, &alphabet, env, &field).map_err(|source| {
                PresentationError::Relation {
                    index,
                    text: text.clone(),
                    source,
                }
            })?;
            rels.push(r);
        }
        Self::new(field, alphabet, tags, rels)
    }

    pub fn generator_names(&self) -> Vec<char> {
        self.alphabet.names().to_vec()
    }

    pub fn grouplike_generators(&self) -> Vec<usize> {
        (0..self.tags.len())
            .filter(|&i| self.tags[i] == GenTag::Grouplike)
            .collect()
    }

    pub fn skew_generators(&self) -> Vec<usize> {
        (0..self.tags.len())
            .filter(|&i| self.tags[i] != GenTag::Grouplike)
            .collect()
    }

    pub fn fmt_tag(&self, i: usize) -> String {
        match &self.tags[i] {
            GenTag::Grouplike => "grouplike".to_string(),
            GenTag::SkewPrimitive(w) if w.is_empty() => "primitive".to_string(),
            GenTag::SkewPrimitive(w) => format!("skewprim {}", self.alphabet.fmt_word(w)),
        }
    }

    pub fn fmt_relations(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| self.alphabet.fmt_poly(r))
            .collect()
    }
}

/// Parses a tag; the word may use integer parameters as exponents.
pub fn parse_tag(tag: &str, a: &Alphabet, env: &PolyEnv) -> Result<GenTag, PresentationError> {
    let t = tag.trim();
    if t == "grouplike" {
        return Ok(GenTag::Grouplike);
    }
    if t == "primitive" {
        return Ok(GenTag::SkewPrimitive(Word::empty()));
    }
    let rest = t
        .strip_prefix("skewprim")
        .ok_or_else(|| PresentationError::UnknownTag(t.to_string()))?
        .trim();
    let rest = rest.strip_prefix("over").map_or(rest, str::trim);
    // Evaluate the word as a polynomial so that `g^mu` works; it must be a
    // single monomial with coefficient 1.
    let f = crate::gf::make_field(2, 1).expect("GF(2) is supported");
    let p = parse_poly(rest, a, env, &f)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.0 == 1 => Ok(GenTag::SkewPrimitive(w.clone())),
        _ => Err(PresentationError::UnknownTag(t.to_string())),
    }
}
