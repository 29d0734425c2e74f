//! Isomorphism criteria against exhaustive search.

use rayon::prelude::*;

use super::HarnessError;
use crate::catalog::{fmt_params, CatalogError, FamilySpec};
use crate::gf::Field;
use crate::hopf::{build_hopf, iso_search, BuildOptions, HopfAlgebra, IsoOptions};

/// Largest parameter space compared pairwise.
pub const MAX_POINTS: u128 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairResult {
    pub a: usize,
    pub b: usize,
    /// `Ok(found)` from the search, or why it did not finish.
    pub oracle: Result<bool, String>,
    pub predicate: bool,
}

impl PairResult {
    pub fn agrees(&self) -> bool {
        self.oracle.as_ref().map_or(false, |&o| o == self.predicate)
    }
}

#[derive(Clone, Debug)]
pub struct IsoComparisonReport {
    pub family: String,
    pub field: String,
    pub points: Vec<String>,
    /// Ordered pairs, row-major over `points`.
    pub pairs: Vec<PairResult>,
}

impl IsoComparisonReport {
    pub fn agreement(&self) -> bool {
        self.pairs.iter().all(PairResult::agrees)
    }

    fn oracle(&self, a: usize, b: usize) -> &Result<bool, String> {
        &self.pairs[a * self.points.len() + b].oracle
    }

    /// The search finds `b → a` whenever it finds `a → b`.
    pub fn oracle_symmetric(&self) -> bool {
        let n = self.points.len();
        (0..n).all(|a| (0..n).all(|b| self.oracle(a, b) == self.oracle(b, a)))
    }

    /// Isomorphism classes according to the search.
    pub fn oracle_classes(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let class: Vec<usize> = (a..n)
                .filter(|&b| b == a || (!seen[b] && self.oracle(a, b) == &Ok(true)))
                .collect();
            for &b in &class {
                seen[b] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn records(&self) -> Vec<String> {
        self.pairs
            .iter()
            .map(|r| {
                let oracle = match &r.oracle {
                    Ok(b) => b.to_string(),
                    Err(e) => format!("error({e})"),
                };
                format!(
                    "{} iso {} {} [{}] [{}] oracle={oracle} predicate={}",
                    if r.agrees() { "PASS" } else { "FAIL" },
                    self.family,
                    self.field,
                    self.points[r.a],
                    self.points[r.b],
                    r.predicate
                )
            })
            .collect()
    }

    pub fn summary(&self) -> String {
        let classes: Vec<String> = self
            .oracle_classes()
            .iter()
            .map(|c| {
                let v: Vec<&str> = c.iter().map(|&i| self.points[i].as_str()).collect();
                format!("{{{}}}", v.join(" | "))
            })
            .collect();
        format!(
            "{} {} {}: {} pairs, agreement={}, oracle symmetric={}, classes {}",
            if self.agreement() { "PASS" } else { "FAIL" },
            self.family,
            self.field,
            self.pairs.len(),
            self.agreement(),
            self.oracle_symmetric(),
            classes.join(" ")
        )
    }
}

/// Runs the search on every ordered pair of parameter points and compares
/// with the family's criterion.
pub fn verify_iso_criteria(fam: &FamilySpec, f: &Field) -> Result<IsoComparisonReport, HarnessError> {
    if fam.iso.is_none() {
        return Err(CatalogError::NoCriterion(fam.id.clone()).into());
    }
    let size = fam.param_space_size(f);
    if size > MAX_POINTS {
        return Err(HarnessError::SweepTooLarge {
            id: fam.id.clone(),
            size,
        });
    }
    let points: Vec<_> = fam.param_space(f);
    let claimed = fam.claimed_dim(f.p());
    let built: Vec<Result<HopfAlgebra, String>> = points
        .par_iter()
        .map(|p| {
            let pres = fam.instantiate(p, f).map_err(|e| e.to_string())?;
            build_hopf(&pres, &BuildOptions::expecting(claimed)).map_err(|e| e.to_string())
        })
        .collect();
    let n = points.len();
    let opts = IsoOptions {
        first_only: true,
        ..Default::default()
    };
    let pairs: Vec<PairResult> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / n, k % n);
            let oracle = match (&built[a], &built[b]) {
                (Ok(ha), Ok(hb)) => iso_search(ha, hb, &opts)
                    .map(|v| !v.is_empty())
                    .map_err(|e| e.to_string()),
                (Err(e), _) | (_, Err(e)) => Err(format!("build: {e}")),
            };
            let predicate = fam.iso_predicate(&points[a], &points[b], f).unwrap_or(false);
            PairResult {
                a,
                b,
                oracle,
                predicate,
            }
        })
        .collect();
    Ok(IsoComparisonReport {
        family: fam.id.clone(),
        field: f.to_string(),
        points: points.iter().map(|p| fmt_params(fam, p)).collect(),
        pairs,
    })
}
