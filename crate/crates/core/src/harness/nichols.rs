//! Fixed Nichols-algebra dimension targets.

use crate::gf::Field;
use crate::nichols::{nichols_dims, BraidedSpace, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Exact(usize),
    /// The computed total must exceed this value.
    Exceeds(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct NicholsTarget {
    pub name: &'static str,
    pub p: u32,
    pub spec: &'static str,
    pub n_max: usize,
    pub expect: Expect,
}

pub fn nichols_targets() -> Vec<NicholsTarget> {
    let t = |name, p, spec, n_max, expect| NicholsTarget {
        name,
        p,
        spec,
        n_max,
        expect,
    };
    vec![
        t("trivial rank 1", 2, "trivial:1", 4, Expect::Exact(2)),
        t("trivial rank 2", 2, "trivial:2", 6, Expect::Exact(4)),
        t("trivial rank 3", 2, "trivial:3", 8, Expect::Exact(8)),
        t("jordan V(1,2)", 2, "jordan:1,2", 10, Expect::Exact(16)),
        t("M(1,2) over C3", 3, "yd-cyclic:1,2,3", 8, Expect::Exact(9)),
        t("M(1,2)+M(0,1) over C2", 2, "yd-cyclic:1,2,2+yd-cyclic:0,1,2", 8, Expect::Exceeds(8)),
    ]
}

#[derive(Clone, Debug)]
pub struct NicholsCheck {
    pub target: NicholsTarget,
    pub graded: Vec<usize>,
    pub total: Option<usize>,
    pub closed: bool,
    pub error: Option<String>,
}

impl NicholsCheck {
    pub fn passed(&self) -> bool {
        match (self.total, self.target.expect) {
            (Some(t), Expect::Exact(e)) => self.closed && t == e,
            (Some(t), Expect::Exceeds(e)) => t > e,
            (None, _) => false,
        }
    }

    pub fn record(&self) -> String {
        let expect = match self.target.expect {
            Expect::Exact(e) => format!("= {e}"),
            Expect::Exceeds(e) => format!("> {e}"),
        };
        let got = match (&self.error, self.total) {
            (Some(e), _) => format!("error({e})"),
            (None, Some(t)) => format!(
                "{t}{} graded={:?}",
                if self.closed { "" } else { " (lower bound)" },
                self.graded
            ),
            (None, None) => "-".into(),
        };
        format!(
            "{} nichols {} [{}] expect {expect} got {got}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.target.name,
            self.target.spec
        )
    }
}

/// Runs the targets whose characteristic matches `f`.
pub fn verify_nichols_suite(f: &Field) -> Vec<NicholsCheck> {
    nichols_targets()
        .into_iter()
        .filter(|t| t.p == f.p())
        .map(|target| {
            let res = BraidedSpace::parse(target.spec, f)
                .and_then(|v| nichols_dims(&v, target.n_max, DEFAULT_BUDGET));
            match res {
                Ok(d) => NicholsCheck {
                    target,
                    graded: d.graded,
                    total: Some(d.total),
                    closed: d.closed,
                    error: None,
                },
                Err(e) => NicholsCheck {
                    target,
                    graded: Vec::new(),
                    total: None,
                    closed: false,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}
