//! TOML presentation files.
//!
//! ```toml
//! field = { p = 2, k = 2 }
//! order = ["x", "h", "g"]          # optional, ascending precedence
//! relations = ["g^4 - 1", "h^2 - 1", "hg - g^3h", "x^2", "gx - xg - g + g^3"]
//!
//! [[generators]]
//! name = "g"
//! tag = "grouplike"
//!
//! [[generators]]
//! name = "x"
//! tag = "skewprim over g^2"
//! ```
//!
//! Numeric literals in relations are element encodings of the field.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{HopfPresentation, PresentationError};
use crate::freealg::{PolyEnv, Scalar};
use crate::gf::{make_field, GfError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("toml: {0}")]
    De(#[from] toml::de::Error),
    #[error("toml: {0}")]
    Ser(#[from] toml::ser::Error),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    pub relations: Vec<String>,
    /// Integer parameters usable as exponents and coefficients.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    pub generators: Vec<GeneratorSpec>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, FormatError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_toml(&self) -> Result<String, FormatError> {
        Ok(toml::to_string(self)?)
    }

    pub fn to_presentation(&self) -> Result<HopfPresentation, FormatError> {
        let field = make_field(self.field.p, self.field.k)?;
        let env = PolyEnv {
            params: self
                .params
                .iter()
                .map(|(k, &v)| (k.clone(), Scalar::Int(v)))
                .collect(),
            integer_literals: false,
        };
        let gens: Vec<(String, String)> = self
            .generators
            .iter()
            .map(|g| (g.name.clone(), g.tag.clone()))
            .collect();
        Ok(HopfPresentation::from_text(
            field,
            &gens,
            self.order.as_deref(),
            &self.relations,
            &env,
        )?)
    }

    /// Serializes a presentation with fully expanded relations.
    pub fn from_presentation(p: &HopfPresentation) -> Self {
        let names = p.generator_names();
        PresentationFile {
            field: FieldSpec {
                p: p.field.p(),
                k: p.field.k(),
            },
            order: Some(names.iter().map(|c| c.to_string()).collect()),
            relations: p.fmt_relations(),
            params: BTreeMap::new(),
            generators: names
                .iter()
                .enumerate()
                .map(|(i, c)| GeneratorSpec {
                    name: c.to_string(),
                    tag: p.fmt_tag(i),
                })
                .collect(),
        }
    }
}
