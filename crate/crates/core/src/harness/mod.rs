//! Verification campaigns over the catalog.
//!
//! Every check produces a report with a one-line record; records carry no
//! timings, so identical inputs give identical text. Work items run in
//! parallel and are sorted before output.

mod identities;
mod iso;
mod nichols;

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{fmt_params, list_families, CatalogError, FamilySpec, Params, Scope};
use crate::findim::FinError;
use crate::freealg::NcPoly;
use crate::gf::{Fe, Field};
use crate::hopf::{build_hopf, BuildError, BuildOptions, CollapseReason, GenTag, HopfPresentation};

pub use identities::{verify_identity_suite, IdentityReport, Suite};
pub use iso::{verify_iso_criteria, IsoComparisonReport, PairResult};
pub use nichols::{nichols_targets, verify_nichols_suite, NicholsCheck, NicholsTarget};

/// Seed used when a sweep is sampled by policy.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
/// Sample size used when a sweep is sampled by policy.
pub const DEFAULT_SAMPLE: usize = 64;
/// Largest parameter space swept exhaustively.
pub const FULL_SWEEP_LIMIT: u128 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{id}: parameter space has {size} points, full sweeps allow {FULL_SWEEP_LIMIT}")]
    SweepTooLarge { id: String, size: u128 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Full,
    Sample { n: usize, seed: u64 },
}

impl Sampling {
    /// GF(2): everything. Otherwise exhaustive for at most two parameters,
    /// sampled with [`DEFAULT_SEED`] beyond that.
    pub fn policy(fam: &FamilySpec, f: &Field) -> Sampling {
        let size = fam.param_space_size(f);
        if (f.order() == 2 || fam.params.len() <= 2) && size <= FULL_SWEEP_LIMIT {
            Sampling::Full
        } else {
            Sampling::Sample {
                n: DEFAULT_SAMPLE,
                seed: DEFAULT_SEED,
            }
        }
    }
}

/// Indices into the parameter space of `fam` selected by `sampling`, sorted.
pub fn select_points(
    fam: &FamilySpec,
    f: &Field,
    sampling: Sampling,
) -> Result<Vec<u128>, HarnessError> {
    let size = fam.param_space_size(f);
    match sampling {
        Sampling::Full if size > FULL_SWEEP_LIMIT => Err(HarnessError::SweepTooLarge {
            id: fam.id.clone(),
            size,
        }),
        Sampling::Full => Ok((0..size).collect()),
        Sampling::Sample { n, .. } if n as u128 >= size => Ok((0..size).collect()),
        Sampling::Sample { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let len = usize::try_from(size).unwrap_or(usize::MAX);
            let mut v: Vec<u128> = sample(&mut rng, len, n)
                .into_iter()
                .map(|i| i as u128)
                .collect();
            v.sort_unstable();
            Ok(v)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Built with the claimed dimension; all axioms hold.
    Ok { dim: usize },
    Collapse(String),
    /// Completion did not finish under its degree cap.
    Budget(String),
    Error(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Ok { dim } => write!(f, "ok(dim={dim},axioms=6/6)"),
            Outcome::Collapse(r) => write!(f, "collapse({r})"),
            Outcome::Budget(r) => write!(f, "budget({r})"),
            Outcome::Error(r) => write!(f, "error({r})"),
        }
    }
}

/// Builds `p` against `claimed` and reports the outcome together with the
/// dimension reached by completion (`None` when the basis exceeded the cap).
pub fn build_outcome(p: &HopfPresentation, claimed: usize) -> (Outcome, Option<usize>) {
    match build_hopf(p, &BuildOptions::expecting(claimed)) {
        Ok(h) => (Outcome::Ok { dim: h.dim() }, Some(h.dim())),
        Err(BuildError::Collapse(c)) => {
            let dim = match c.reason {
                CollapseReason::ZeroRing => Some(0),
                CollapseReason::DimensionDrop { got, .. } => Some(got),
                _ => Some(claimed),
            };
            (Outcome::Collapse(c.reason.to_string()), dim)
        }
        Err(BuildError::Infinite(FinError::InfiniteBasis { cap })) => (
            Outcome::Collapse(format!("dimension-exceeds({cap})")),
            None,
        ),
        Err(BuildError::Infinite(e)) => (Outcome::Error(e.to_string()), None),
        Err(BuildError::CapExceeded(d)) => (Outcome::Budget(format!("degree cap {d}")), None),
    }
}

/// One parameter assignment of one family.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub family: String,
    pub field: String,
    pub index: u128,
    pub params: String,
    pub claimed_dim: usize,
    pub outcome: Outcome,
    /// Completed dimension, when finite below the cap.
    pub dim: Option<usize>,
    /// Value of the ambiguity condition, for families that carry one.
    pub condition: Option<bool>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// Without a condition the build must succeed. With one, the claimed
    /// dimension must be reached exactly when the condition holds, and a
    /// build satisfying the condition must pass the axioms.
    pub fn passed(&self) -> bool {
        match self.condition {
            None => matches!(self.outcome, Outcome::Ok { .. }),
            Some(true) => matches!(self.outcome, Outcome::Ok { .. }),
            Some(false) => {
                self.dim != Some(self.claimed_dim)
                    && !matches!(self.outcome, Outcome::Budget(_) | Outcome::Error(_))
            }
        }
    }

    pub fn record(&self) -> String {
        let cond = match self.condition {
            None => String::new(),
            Some(c) => format!(" condition={c}"),
        };
        let params = if self.params.is_empty() { "-" } else { &self.params };
        format!(
            "{} {} {} {} [{params}] {}{cond}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.family,
            self.field,
            self.claimed_dim,
            self.outcome,
        )
    }
}

fn verify_point(fam: &FamilySpec, f: &Field, index: u128, params: Params) -> VerificationReport {
    let start = Instant::now();
    let claimed = fam.claimed_dim(f.p());
    let condition = fam
        .ambiguity
        .as_ref()
        .map(|_| fam.ambiguity_condition(&params, f).unwrap_or(false));
    let (outcome, dim) = match fam.instantiate(&params, f) {
        Ok(p) => build_outcome(&p, claimed),
        Err(e) => (Outcome::Error(e.to_string()), None),
    };
    VerificationReport {
        family: fam.id.clone(),
        field: f.to_string(),
        index,
        params: fmt_params(fam, &params),
        claimed_dim: claimed,
        outcome,
        dim,
        condition,
        elapsed: start.elapsed(),
    }
}

/// Instantiates, builds and checks every selected point of a family.
pub fn verify_family(
    fam: &FamilySpec,
    f: &Field,
    sampling: Sampling,
) -> Result<Vec<VerificationReport>, HarnessError> {
    if let Some(c) = fam.characteristic {
        if c != f.p() {
            return Err(CatalogError::CharMismatch {
                id: fam.id.clone(),
                need: c,
                got: f.p(),
            }
            .into());
        }
    }
    let points = select_points(fam, f, sampling)?;
    Ok(verify_points(fam, f, points.into_iter().map(|i| (i, fam.param_point(f, i))).collect()))
}

/// Checks explicit parameter points; `index` only orders the output.
pub fn verify_points(
    fam: &FamilySpec,
    f: &Field,
    points: Vec<(u128, Params)>,
) -> Vec<VerificationReport> {
    let mut out: Vec<VerificationReport> = points
        .into_par_iter()
        .map(|(i, p)| verify_point(fam, f, i, p))
        .collect();
    out.sort_by_key(|r| r.index);
    out
}

/// Runs the sweep policy over every family in `scope` that the field
/// supports. `sampling` overrides the policy when given.
pub fn verify_scope(
    scope: Scope,
    f: &Field,
    sampling: Option<Sampling>,
) -> Result<Vec<VerificationReport>, HarnessError> {
    let fams: Vec<&FamilySpec> = list_families(scope)
        .into_iter()
        .filter(|fam| fam.supports(f))
        .collect();
    let work: Vec<(usize, &FamilySpec, u128)> = fams
        .iter()
        .enumerate()
        .map(|(k, fam)| {
            let s = sampling.unwrap_or_else(|| Sampling::policy(fam, f));
            Ok(select_points(fam, f, s)?
                .into_iter()
                .map(move |i| (k, *fam, i)))
        })
        .collect::<Result<Vec<_>, HarnessError>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut out: Vec<(usize, VerificationReport)> = work
        .into_par_iter()
        .map(|(k, fam, i)| (k, verify_point(fam, f, i, fam.param_point(f, i))))
        .collect();
    out.sort_by_key(|(k, r)| (*k, r.index));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// Per-family totals of a campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub family: String,
    pub points: usize,
    pub ok: usize,
    pub collapse: usize,
    pub other: usize,
    pub passed: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> Vec<SummaryRow> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    for r in reports {
        if rows.last().map_or(true, |row| row.family != r.family) {
            rows.push(SummaryRow {
                family: r.family.clone(),
                points: 0,
                ok: 0,
                collapse: 0,
                other: 0,
                passed: 0,
            });
        }
        let row = rows.last_mut().unwrap();
        row.points += 1;
        match r.outcome {
            Outcome::Ok { .. } => row.ok += 1,
            Outcome::Collapse(_) => row.collapse += 1,
            _ => row.other += 1,
        }
        row.passed += usize::from(r.passed());
    }
    rows
}

pub fn summary_table(rows: &[SummaryRow]) -> String {
    let mut s = format!(
        "{:<14} {:>6} {:>6} {:>8} {:>6} {:>6}\n",
        "family", "points", "ok", "collapse", "other", "pass"
    );
    for r in rows {
        s.push_str(&format!(
            "{:<14} {:>6} {:>6} {:>8} {:>6} {:>6}\n",
            r.family, r.points, r.ok, r.collapse, r.other, r.passed
        ));
    }
    let total = |g: fn(&SummaryRow) -> usize| rows.iter().map(g).sum::<usize>();
    s.push_str(&format!(
        "{:<14} {:>6} {:>6} {:>8} {:>6} {:>6}\n",
        "total",
        total(|r| r.points),
        total(|r| r.ok),
        total(|r| r.collapse),
        total(|r| r.other),
        total(|r| r.passed)
    ));
    s
}

/// How a presentation was perturbed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// A constant 1 added to relation `relation`.
    ShiftedRelation { relation: usize },
    /// Generator `gen` retagged as skew-primitive over a different word.
    Retagged { gen: usize },
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fault::ShiftedRelation { relation } => write!(f, "shifted-relation({relation})"),
            Fault::Retagged { gen } => write!(f, "retagged(gen {gen})"),
        }
    }
}

/// Perturbs a presentation so that it can no longer be a Hopf algebra of
/// the same shape: the first relation led by a power of a skew-primitive
/// generator gets `+1` (its counit becomes nonzero); failing that, the first
/// skew-primitive generator is retagged over its own tag times the first
/// grouplike generator.
pub fn inject_fault(p: &HopfPresentation) -> Option<(HopfPresentation, Fault)> {
    let f = &p.field;
    let skew = p.skew_generators();
    for (ri, r) in p.relations.iter().enumerate() {
        let Some((w, _)) = r.leading(&p.alphabet) else {
            continue;
        };
        let l = w.letters();
        if !l.is_empty() && l.iter().all(|&c| c == l[0]) && skew.contains(&(l[0] as usize)) {
            let mut q = p.clone();
            q.relations[ri] = r.add(&NcPoly::constant(Fe::ONE), f);
            return Some((q, Fault::ShiftedRelation { relation: ri }));
        }
    }
    let gen = *skew.first()?;
    let g = *p.grouplike_generators().first()?;
    let mut q = p.clone();
    if let GenTag::SkewPrimitive(w) = &p.tags[gen] {
        q.tags[gen] = GenTag::SkewPrimitive(w.concat(&crate::freealg::Word::letter(g)));
    }
    Some((q, Fault::Retagged { gen }))
}

/// Result of building one fault-injected presentation.
#[derive(Clone, Debug)]
pub struct FaultReport {
    pub family: String,
    pub group: String,
    pub fault: Option<Fault>,
    pub outcome: Outcome,
}

impl FaultReport {
    /// A fault passes when the build does not succeed.
    pub fn passed(&self) -> bool {
        self.fault.is_some() && !matches!(self.outcome, Outcome::Ok { .. })
    }

    pub fn record(&self) -> String {
        format!(
            "{} fault {} ({}) {} {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.family,
            self.group,
            self.fault.as_ref().map_or("none".to_string(), Fault::to_string),
            self.outcome
        )
    }
}

/// Fault-injects the first parameter point of every family in `scope`.
pub fn fault_campaign(scope: Scope, f: &Field) -> Vec<FaultReport> {
    let fams: Vec<&FamilySpec> = list_families(scope)
        .into_iter()
        .filter(|fam| fam.supports(f))
        .collect();
    fams.par_iter()
        .map(|fam| {
            let params = fam.param_point(f, 0);
            let (fault, outcome) = match fam.instantiate(&params, f) {
                Ok(p) => match inject_fault(&p) {
                    Some((q, fault)) => (Some(fault), build_outcome(&q, fam.claimed_dim(f.p())).0),
                    None => (None, Outcome::Error("no fault site".into())),
                },
                Err(e) => (None, Outcome::Error(e.to_string())),
            };
            FaultReport {
                family: fam.id.clone(),
                group: fam.group.clone(),
                fault,
                outcome,
            }
        })
        .collect()
}
