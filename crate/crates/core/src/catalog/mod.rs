//! The catalog of classified families as data.
//!
//! Records live in `catalog.toml`. Each family names its coradical group,
//! the non-grouplike generators with their coalgebra tags, extra relations
//! and typed parameters. [`instantiate`] turns a family and a parameter
//! assignment into a [`HopfPresentation`]: group relations are added from
//! the group name and generators that never meet in a relation are made to
//! commute.

mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freealg::{parse_poly, Alphabet, PolyEnv};
use crate::gf::{Fe, Field};
use crate::hopf::{HopfPresentation, PresentationError};

pub use crate::freealg::Scalar;
pub use expr::{CmpOp, Domain, Env, Expr, ExprError, IntExpr, Pred};

/// A parameter assignment, by name.
pub type Params = Env;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("parameter {name} = {value} is outside {domain}")]
    OutOfDomain {
        name: String,
        value: String,
        domain: String,
    },
    #[error("parameter {0} is missing")]
    MissingParam(String),
    #[error("family has no parameter {0}")]
    UnexpectedParam(String),
    #[error("family {id} needs characteristic {need}, field has {got}")]
    CharMismatch { id: String, need: u32, got: u32 },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("family {0} has no ambiguity condition")]
    NoCondition(String),
    #[error("family {0} has no isomorphism criterion")]
    NoCriterion(String),
    #[error("{id}: {source}")]
    Expr { id: String, source: ExprError },
    #[error("catalog data: {0}")]
    Data(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    /// Dimension 16 in characteristic 2.
    T42,
    /// Dimension p^4 with coradical C_p.
    T37,
    /// Presentations with parameters from the lemmas.
    Lemma,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::T42 => "T4.2",
            Source::T37 => "T3.7",
            Source::Lemma => "lemma",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    T42,
    T37,
    Lemmas,
    All,
}

impl Scope {
    pub fn parse(s: &str) -> Option<Scope> {
        Some(match s.to_ascii_lowercase().as_str() {
            "t4.2" | "t42" => Scope::T42,
            "t3.7" | "t37" => Scope::T37,
            "lemmas" | "lemma" => Scope::Lemmas,
            "all" => Scope::All,
            _ => return None,
        })
    }

    fn includes(self, s: Source) -> bool {
        matches!(
            (self, s),
            (Scope::All, _)
                | (Scope::T42, Source::T42)
                | (Scope::T37, Source::T37)
                | (Scope::Lemmas, Source::Lemma)
        )
    }
}

/// Claimed dimension: a constant or a power of the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimSpec {
    Fixed(usize),
    PowP(u32),
}

impl DimSpec {
    fn parse(s: &str) -> Option<DimSpec> {
        let s = s.trim();
        if let Some(e) = s.strip_prefix("p^") {
            return e.parse().ok().map(DimSpec::PowP);
        }
        s.parse().ok().map(DimSpec::Fixed)
    }

    pub fn at(self, p: u32) -> usize {
        match self {
            DimSpec::Fixed(d) => d,
            DimSpec::PowP(e) => (p as usize).pow(e),
        }
    }
}

impl fmt::Display for DimSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimSpec::Fixed(d) => write!(f, "{d}"),
            DimSpec::PowP(e) => write!(f, "p^{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: String,
    pub domain: Domain,
}

/// A predicate together with its source text.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub text: String,
    pub pred: Pred,
}

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub id: String,
    pub source: Source,
    /// Position in its list; `None` for lemma presentations.
    pub item: Option<u32>,
    pub label: Option<String>,
    pub group: String,
    /// Non-grouplike generators with their tags.
    pub generators: Vec<(String, String)>,
    pub relations: Vec<String>,
    pub params: Vec<ParamSpec>,
    pub characteristic: Option<u32>,
    pub dim: DimSpec,
    pub ambiguity: Option<Criterion>,
    pub iso: Option<Criterion>,
    pub notes: Option<String>,
    /// The T3.7 record a characteristic-2 item is copied from.
    pub template: Option<String>,
}

/// One record as stored in `catalog.toml`.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    template: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    char: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    params: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambiguity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    iso: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    notes: Option<String>,
}

#[derive(Deserialize, Serialize)]
struct RawCatalog {
    family: Vec<RawFamily>,
}

const DATA: &str = include_str!("catalog.toml");

/// Group generators and relations of a coradical, by name.
pub fn group_presentation(name: &str, p: u32) -> Option<(Vec<&'static str>, Vec<String>)> {
    let s = |v: &[&str]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>();
    Some(match name {
        "D4" => (vec!["g", "h"], s(&["g^4 - 1", "h^2 - 1", "hg - g^3h"])),
        "Q8" => (vec!["g", "h"], s(&["g^4 - 1", "hg - g^3h", "g^2 - h^2"])),
        "C8" => (vec!["g"], s(&["g^8 - 1"])),
        "C4xC2" => (vec!["g", "h"], s(&["g^4 - 1", "h^2 - 1", "[g,h]"])),
        "C2xC2xC2" => (
            vec!["g", "h", "k"],
            s(&["g^2 - 1", "h^2 - 1", "k^2 - 1", "[g,h]", "[g,k]", "[h,k]"]),
        ),
        "C4" => (vec!["g"], s(&["g^4 - 1"])),
        "C2xC2" => (vec!["g", "h"], s(&["g^2 - 1", "h^2 - 1", "[g,h]"])),
        "C2" => (vec!["g"], s(&["g^2 - 1"])),
        "Cp" => (vec!["g"], vec![format!("g^{p} - 1")]),
        "CpxCp" => (
            vec!["g", "h"],
            vec![format!("g^{p} - 1"), format!("h^{p} - 1"), "[g,h]".into()],
        ),
        _ => return None,
    })
}

/// Ascending precedence of generator names: `z < y < x < k < h < g`.
const PRECEDENCE: &str = "zyxkhg";

fn parse_source(id: &str) -> Result<(Source, Option<u32>), CatalogError> {
    let bad = || CatalogError::Data(format!("bad id {id:?}"));
    if let Some(n) = id.strip_prefix("T4.2-") {
        return Ok((Source::T42, Some(n.parse().map_err(|_| bad())?)));
    }
    if let Some(n) = id.strip_prefix("T3.7-") {
        return Ok((Source::T37, Some(n.parse().map_err(|_| bad())?)));
    }
    if id.starts_with('L') {
        return Ok((Source::Lemma, None));
    }
    Err(bad())
}

fn criterion(id: &str, text: &Option<String>) -> Result<Option<Criterion>, CatalogError> {
    text.as_ref()
        .map(|t| {
            let pred = Pred::parse(t).map_err(|e| CatalogError::Data(format!("{id}: {e}")))?;
            Ok(Criterion {
                text: t.split_whitespace().collect::<Vec<_>>().join(" "),
                pred,
            })
        })
        .transpose()
}

fn load(raw: &RawFamily, by_id: &BTreeMap<String, RawFamily>) -> Result<FamilySpec, CatalogError> {
    let id = &raw.id;
    let (source, item) = parse_source(id)?;
    let base = match &raw.template {
        Some(t) => by_id
            .get(t)
            .ok_or_else(|| CatalogError::Data(format!("{id}: unknown template {t}")))?,
        None => raw,
    };
    let group = base
        .group
        .clone()
        .ok_or_else(|| CatalogError::Data(format!("{id}: missing group")))?;
    if group_presentation(&group, 2).is_none() {
        return Err(CatalogError::Data(format!("{id}: unknown group {group}")));
    }
    let generators = base
        .gens
        .iter()
        .map(|g| {
            let (n, t) = g
                .split_once(':')
                .ok_or_else(|| CatalogError::Data(format!("{id}: bad generator {g:?}")))?;
            Ok((n.trim().to_string(), t.trim().to_string()))
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    let params = base
        .params
        .iter()
        .map(|s| {
            let (n, d) = s
                .split_once(" in ")
                .ok_or_else(|| CatalogError::Data(format!("{id}: bad parameter {s:?}")))?;
            let domain = Domain::parse(d.trim())
                .map_err(|e| CatalogError::Data(format!("{id}: {e}")))?;
            Ok(ParamSpec {
                name: n.trim().to_string(),
                domain,
            })
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    let characteristic = raw.char.or(match source {
        Source::T42 => Some(2),
        _ => base.char,
    });
    let dim_text = raw.dim.clone().or(base.dim.clone()).unwrap_or_else(|| {
        if source == Source::T42 { "16" } else { "p^4" }.to_string()
    });
    let dim = DimSpec::parse(&dim_text)
        .ok_or_else(|| CatalogError::Data(format!("{id}: bad dim {dim_text:?}")))?;
    Ok(FamilySpec {
        id: id.clone(),
        source,
        item,
        label: raw.label.clone(),
        group,
        generators,
        relations: base.relations.clone(),
        params,
        characteristic,
        dim,
        ambiguity: criterion(id, &base.ambiguity)?,
        iso: criterion(id, &base.iso)?,
        notes: raw.notes.clone(),
        template: raw.template.clone(),
    })
}

struct Catalog {
    families: Vec<FamilySpec>,
    raw: BTreeMap<String, RawFamily>,
}

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        let data: RawCatalog = toml::from_str(DATA).expect("catalog.toml parses");
        let raw: BTreeMap<String, RawFamily> = data
            .family
            .iter()
            .map(|r| (r.id.clone(), r.clone()))
            .collect();
        assert_eq!(raw.len(), data.family.len(), "duplicate family id");
        let mut families = data
            .family
            .iter()
            .map(|r| load(r, &raw).unwrap_or_else(|e| panic!("{e}")))
            .collect::<Vec<_>>();
        families.sort_by(|a, b| (a.source, a.item, &a.id).cmp(&(b.source, b.item, &b.id)));
        Catalog { families, raw }
    })
}

/// Families in `scope`, in list order.
pub fn list_families(scope: Scope) -> Vec<&'static FamilySpec> {
    catalog()
        .families
        .iter()
        .filter(|f| scope.includes(f.source))
        .collect()
}

pub fn family(id: &str) -> Result<&'static FamilySpec, CatalogError> {
    catalog()
        .families
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))
}

/// The stored record of a family as TOML.
pub fn export_toml(id: &str) -> Result<String, CatalogError> {
    let raw = catalog()
        .raw
        .get(id)
        .ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))?;
    toml::to_string(&RawCatalog {
        family: vec![raw.clone()],
    })
    .map_err(|e| CatalogError::Data(e.to_string()))
}

impl FamilySpec {
    pub fn claimed_dim(&self, p: u32) -> usize {
        self.dim.at(p)
    }

    pub fn supports(&self, f: &Field) -> bool {
        self.characteristic.map_or(true, |c| c == f.p())
    }

    fn check_field(&self, f: &Field) -> Result<(), CatalogError> {
        match self.characteristic {
            Some(c) if c != f.p() => Err(CatalogError::CharMismatch {
                id: self.id.clone(),
                need: c,
                got: f.p(),
            }),
            _ => Ok(()),
        }
    }

    fn check_params(&self, params: &Params, f: &Field) -> Result<(), CatalogError> {
        for ps in &self.params {
            let v = *params
                .get(&ps.name)
                .ok_or_else(|| CatalogError::MissingParam(ps.name.clone()))?;
            if !ps.domain.contains(v, f) {
                return Err(CatalogError::OutOfDomain {
                    name: ps.name.clone(),
                    value: v.to_string(),
                    domain: ps.domain.to_string(),
                });
            }
        }
        for k in params.keys() {
            if !self.params.iter().any(|ps| &ps.name == k) {
                return Err(CatalogError::UnexpectedParam(k.clone()));
            }
        }
        Ok(())
    }

    /// Number of points in the parameter space over `f`.
    pub fn param_space_size(&self, f: &Field) -> u128 {
        self.params
            .iter()
            .map(|ps| ps.domain.values(f).len() as u128)
            .product()
    }

    /// The `index`-th point of the parameter space (mixed radix, first
    /// parameter fastest).
    pub fn param_point(&self, f: &Field, mut index: u128) -> Params {
        let mut out = Params::new();
        for ps in &self.params {
            let vals = ps.domain.values(f);
            let n = vals.len() as u128;
            out.insert(ps.name.clone(), vals[(index % n) as usize]);
            index /= n;
        }
        out
    }

    /// Every point of the parameter space.
    pub fn param_space(&self, f: &Field) -> Vec<Params> {
        (0..self.param_space_size(f))
            .map(|i| self.param_point(f, i))
            .collect()
    }

    fn poly_env(&self, params: &Params, f: &Field) -> PolyEnv {
        let mut env = PolyEnv {
            params: params.clone(),
            integer_literals: true,
        };
        env.params
            .entry("p".into())
            .or_insert(Scalar::Int(f.p() as i64));
        env
    }

    /// Group generators, skew generators and all relations as text.
    fn full_text(
        &self,
        params: &Params,
        f: &Field,
    ) -> Result<(Vec<(String, String)>, Vec<String>, Vec<String>), CatalogError> {
        let (ggens, grels) = group_presentation(&self.group, f.p()).expect("group checked at load");
        let mut gens: Vec<(String, String)> = ggens
            .iter()
            .map(|g| (g.to_string(), "grouplike".to_string()))
            .collect();
        gens.extend(self.generators.iter().cloned());
        let mut order: Vec<String> = gens.iter().map(|(n, _)| n.clone()).collect();
        order.sort_by_key(|n| PRECEDENCE.find(n.as_str()).unwrap_or(usize::MAX));

        let mut relations = grels;
        relations.extend(self.relations.iter().cloned());

        // Pairs of generators that occur together in some word.
        let names: Vec<&str> = order.iter().map(|s| s.as_str()).collect();
        let alphabet = Alphabet::new(&names).map_err(PresentationError::from)?;
        let mut probe = params.clone();
        for ps in &self.params {
            if !matches!(ps.domain, Domain::Ints(_) | Domain::IntUnits) {
                probe.insert(ps.name.clone(), Scalar::Elem(Fe::ONE));
            }
        }
        let env = self.poly_env(&probe, f);
        let mut met = BTreeSet::new();
        for (index, text) in relations.iter().enumerate() {
            let r = parse_poly(text, &alphabet, &env, f).map_err(|source| {
                PresentationError::Relation {
                    index,
                    text: text.clone(),
                    source,
                }
            })?;
            for (w, _) in r.terms() {
                let ls: BTreeSet<u8> = w.letters().iter().copied().collect();
                for &a in &ls {
                    for &b in &ls {
                        met.insert((a, b));
                    }
                }
            }
        }
        let n = names.len() as u8;
        for a in (0..n).rev() {
            for b in (0..a).rev() {
                if !met.contains(&(a, b)) {
                    relations.push(format!("[{},{}]", names[a as usize], names[b as usize]));
                }
            }
        }
        Ok((gens, order, relations))
    }

    /// All relations of the instantiated presentation, as text, including
    /// group relations and implicit commutators.
    pub fn relations_text(&self, params: &Params, f: &Field) -> Result<Vec<String>, CatalogError> {
        self.check_field(f)?;
        self.check_params(params, f)?;
        Ok(self.full_text(params, f)?.2)
    }

    pub fn instantiate(&self, params: &Params, f: &Field) -> Result<HopfPresentation, CatalogError> {
        self.check_field(f)?;
        self.check_params(params, f)?;
        let (gens, order, relations) = self.full_text(params, f)?;
        let env = self.poly_env(params, f);
        Ok(HopfPresentation::from_text(
            f.clone(),
            &gens,
            Some(&order),
            &relations,
            &env,
        )?)
    }

    pub fn ambiguity_condition(&self, params: &Params, f: &Field) -> Result<bool, CatalogError> {
        let c = self
            .ambiguity
            .as_ref()
            .ok_or_else(|| CatalogError::NoCondition(self.id.clone()))?;
        self.check_params(params, f)?;
        c.pred.eval(params, f).map_err(|source| CatalogError::Expr {
            id: self.id.clone(),
            source,
        })
    }

    /// Whether the criterion claims the members at `p1` and `p2` isomorphic.
    pub fn iso_predicate(&self, p1: &Params, p2: &Params, f: &Field) -> Result<bool, CatalogError> {
        let c = self
            .iso
            .as_ref()
            .ok_or_else(|| CatalogError::NoCriterion(self.id.clone()))?;
        self.check_params(p1, f)?;
        self.check_params(p2, f)?;
        let mut env = p1.clone();
        for (k, v) in p2 {
            env.insert(format!("{k}'"), *v);
        }
        c.pred.eval(&env, f).map_err(|source| CatalogError::Expr {
            id: self.id.clone(),
            source,
        })
    }
}

/// Formats a parameter assignment as `name=value` pairs in declaration order.
pub fn fmt_params(fam: &FamilySpec, params: &Params) -> String {
    fam.params
        .iter()
        .filter_map(|ps| params.get(&ps.name).map(|v| format!("{}={v}", ps.name)))
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `name=value,...`. Values of field-valued parameters are element
/// encodings; integer parameters take integers.
pub fn parse_params(fam: &FamilySpec, s: &str) -> Result<Params, CatalogError> {
    let mut out = Params::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CatalogError::Data(format!("bad parameter {part:?}")))?;
        let k = k.trim();
        let ps = fam
            .params
            .iter()
            .find(|ps| ps.name == k)
            .ok_or_else(|| CatalogError::UnexpectedParam(k.to_string()))?;
        let n: i64 = v
            .trim()
            .parse()
            .map_err(|_| CatalogError::Data(format!("bad value {v:?}")))?;
        let val = match ps.domain {
            Domain::Ints(_) | Domain::IntUnits => Scalar::Int(n),
            _ => Scalar::Elem(Fe(n as u16)),
        };
        out.insert(k.to_string(), val);
    }
    Ok(out)
}

/// Convenience wrappers by family id.
pub fn instantiate(id: &str, params: &Params, f: &Field) -> Result<HopfPresentation, CatalogError> {
    family(id)?.instantiate(params, f)
}

pub fn ambiguity_condition(id: &str, params: &Params, f: &Field) -> Result<bool, CatalogError> {
    family(id)?.ambiguity_condition(params, f)
}

pub fn iso_predicate(id: &str, p1: &Params, p2: &Params, f: &Field) -> Result<bool, CatalogError> {
    family(id)?.iso_predicate(p1, p2, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn counts() {
        assert_eq!(list_families(Scope::T42).len(), 197);
        assert_eq!(list_families(Scope::T37).len(), 35);
        assert_eq!(list_families(Scope::Lemmas).len(), 5);
        let items: Vec<u32> = list_families(Scope::T42)
            .iter()
            .map(|f| f.item.unwrap())
            .collect();
        assert_eq!(items, (1..=197).collect::<Vec<_>>());
    }

    #[test]
    fn implicit_commutators() {
        let f = make_field(2, 1).unwrap();
        let rels = family("T4.2-1")
            .unwrap()
            .relations_text(&Params::new(), &f)
            .unwrap();
        assert!(rels.contains(&"[g,x]".to_string()));
        assert!(rels.contains(&"[h,x]".to_string()));
        let rels = family("T4.2-139")
            .unwrap()
            .relations_text(&Params::new(), &f)
            .unwrap();
        assert!(rels.contains(&"[g,z]".to_string()));
        assert!(!rels.contains(&"[g,x]".to_string()));
    }

    #[test]
    fn template_copies() {
        let a = family("T4.2-153").unwrap();
        let b = family("T3.7-5").unwrap();
        assert_eq!(a.relations, b.relations);
        assert_eq!(a.characteristic, Some(2));
        assert_eq!(a.claimed_dim(2), 16);
        assert!(a.iso.is_some());
    }

    #[test]
    fn domain_checks() {
        let f = make_field(2, 1).unwrap();
        let fam = family("T4.2-12").unwrap();
        let p = parse_params(fam, "mu=3").unwrap();
        assert!(matches!(
            fam.instantiate(&p, &f),
            Err(CatalogError::OutOfDomain { .. })
        ));
        assert!(matches!(
            fam.instantiate(&Params::new(), &f),
            Err(CatalogError::MissingParam(_))
        ));
        let f3 = make_field(3, 1).unwrap();
        assert!(matches!(
            fam.instantiate(&parse_params(fam, "mu=1").unwrap(), &f3),
            Err(CatalogError::CharMismatch { .. })
        ));
    }

    #[test]
    fn everything_instantiates() {
        for (p, k) in [(2, 1), (2, 2), (3, 1)] {
            let f = make_field(p, k).unwrap();
            for fam in list_families(Scope::All) {
                if !fam.supports(&f) {
                    continue;
                }
                let n = fam.param_space_size(&f).min(64);
                for i in 0..n {
                    let pt = fam.param_point(&f, i);
                    fam.instantiate(&pt, &f)
                        .unwrap_or_else(|e| panic!("{} {:?}: {e}", fam.id, pt));
                }
            }
        }
    }

    #[test]
    fn iso_predicates_reflexive_and_symmetric() {
        let f = make_field(2, 2).unwrap();
        for fam in list_families(Scope::All) {
            if fam.iso.is_none() || !fam.supports(&f) {
                continue;
            }
            let pts = fam.param_space(&f);
            for a in &pts {
                assert!(fam.iso_predicate(a, a, &f).unwrap(), "{} {:?}", fam.id, a);
                for b in &pts {
                    assert_eq!(
                        fam.iso_predicate(a, b, &f).unwrap(),
                        fam.iso_predicate(b, a, &f).unwrap(),
                        "{} {:?} {:?}",
                        fam.id,
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn export_roundtrip() {
        let t = export_toml("T4.2-5").unwrap();
        let back: RawCatalog = toml::from_str(&t).unwrap();
        assert_eq!(back.family[0].id, "T4.2-5");
        assert_eq!(back.family[0].relations.len(), 3);
    }
}
