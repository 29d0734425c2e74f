//! Seeded random checks of the positive-characteristic identities.
//!
//! * `jacobson`: for random `a, b` in catalog algebras, the expansion of
//!   `(a + b)^p` through the coefficients `s_i(a, b)` and the relations
//!   between `p`-th powers and iterated adjoints.
//! * `lemma210`: in `k<g, x>/(g^n - 1, gx - xg - g(1 - g), x^(p^2) - x^p)`
//!   with `p | n`, the formulas for `g^i x`, `(g)(ad_R x)^(p-1)`,
//!   `(ad_L x)^(p-1)(g)` and `[x^p, g]`.
//! * `lemma211`: in the three-generator algebra over `C_p` with random
//!   `λ1, λ2 ∈ {0,1}`, `λ3` and `μ`, the closed forms of `(x)(ad_R y)^n`
//!   and `(ad_L x)^n(y)`.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{list_families, FamilySpec, Scope};
use crate::findim::FinAlgebra;
use crate::freealg::{parse_poly, Alphabet, PolyEnv, Scalar};
use crate::gf::{axpy, Fe, Field};
use crate::hopf::{build_hopf, BuildOptions};
use crate::rewrite::{complete, default_degree_cap, CompletionStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Jacobson,
    Lemma210,
    Lemma211,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "jacobson" => Suite::Jacobson,
            "lemma210" => Suite::Lemma210,
            "lemma211" => Suite::Lemma211,
            _ => return None,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Jacobson => "jacobson",
            Suite::Lemma210 => "lemma210",
            Suite::Lemma211 => "lemma211",
        })
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub suite: Suite,
    pub field: String,
    pub trials: usize,
    /// One line per failed identity.
    pub failures: Vec<String>,
    /// Algebras used, with their dimensions.
    pub algebras: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.trials > 0
    }

    pub fn record(&self) -> String {
        format!(
            "{} identities {} {} trials={} failures={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.field,
            self.trials,
            self.failures.len()
        )
    }
}

pub fn verify_identity_suite(suite: Suite, f: &Field, trials: usize, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = IdentityReport {
        suite,
        field: f.to_string(),
        trials,
        failures: Vec::new(),
        algebras: Vec::new(),
    };
    match suite {
        Suite::Jacobson => jacobson(f, trials, &mut rng, &mut rep),
        Suite::Lemma210 => lemma210(f, trials, &mut rng, &mut rep),
        Suite::Lemma211 => lemma211(f, trials, &mut rng, &mut rep),
    }
    rep
}

// Vector helpers over an algebra.

fn add(a: &[Fe], b: &[Fe], f: &Field) -> Vec<Fe> {
    let mut out = a.to_vec();
    axpy(&mut out, Fe::ONE, b, f);
    out
}

fn sub(a: &[Fe], b: &[Fe], f: &Field) -> Vec<Fe> {
    let mut out = a.to_vec();
    axpy(&mut out, f.neg(Fe::ONE), b, f);
    out
}

fn scale(a: &[Fe], c: Fe, f: &Field) -> Vec<Fe> {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

/// `(a)(ad_R b)^n`.
fn ad_r(alg: &FinAlgebra, a: &[Fe], b: &[Fe], n: usize) -> Vec<Fe> {
    (0..n).fold(a.to_vec(), |acc, _| alg.commutator(&acc, b))
}

/// `(ad_L a)^n(b)`.
fn ad_l(alg: &FinAlgebra, a: &[Fe], b: &[Fe], n: usize) -> Vec<Fe> {
    (0..n).fold(b.to_vec(), |acc, _| alg.commutator(a, &acc))
}

/// `c^e` with `0^0 = 1`.
fn powz(f: &Field, c: Fe, e: usize) -> Fe {
    (0..e).fold(Fe::ONE, |acc, _| f.mul(acc, c))
}

fn random_vec(dim: usize, f: &Field, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    (0..dim)
        .map(|_| Fe(rng.gen_range(0..f.order()) as u16))
        .collect()
}

/// The terms `s_i(a, b)`, `i = 1..p-1`: `i s_i` is the coefficient of
/// `λ^(i-1)` in `(a)(ad_R (λa + b))^(p-1)`.
pub fn jacobson_terms(alg: &FinAlgebra, a: &[Fe], b: &[Fe]) -> Vec<Vec<Fe>> {
    let f = alg.field();
    let p = f.p() as usize;
    let dim = alg.dim();
    // coeffs[k] is the coefficient of λ^k.
    let mut coeffs = vec![a.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec![Fe::ZERO; dim]; coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            axpy(&mut next[k], Fe::ONE, &alg.commutator(c, b), f);
            axpy(&mut next[k + 1], Fe::ONE, &alg.commutator(c, a), f);
        }
        coeffs = next;
    }
    (1..p)
        .map(|i| {
            let inv = f.inv(f.from_int(i as i64)).expect("i < p is a unit");
            scale(&coeffs[i - 1], inv, f)
        })
        .collect()
}

fn catalog_pool(f: &Field) -> Vec<&'static FamilySpec> {
    let scope = if f.p() == 2 { Scope::T42 } else { Scope::T37 };
    list_families(scope)
        .into_iter()
        .filter(|fam| fam.supports(f))
        .collect()
}

fn jacobson(f: &Field, trials: usize, rng: &mut ChaCha8Rng, rep: &mut IdentityReport) {
    let p = f.p() as usize;
    let pool = catalog_pool(f);
    let mut cache: HashMap<String, Option<FinAlgebra>> = HashMap::new();
    let mut done = 0;
    while done < trials {
        let fam = *pool.choose(rng).expect("catalog is not empty");
        let alg = cache.entry(fam.id.clone()).or_insert_with(|| {
            let pres = fam.instantiate(&fam.param_point(f, 0), f).ok()?;
            let h = build_hopf(&pres, &BuildOptions::expecting(fam.claimed_dim(f.p()))).ok()?;
            rep.algebras.push(format!("{} dim {}", fam.id, h.dim()));
            Some(h.algebra)
        });
        let Some(alg) = alg.as_ref() else { continue };
        done += 1;
        let dim = alg.dim();
        let a = random_vec(dim, f, rng);
        let b = random_vec(dim, f, rng);
        let mut fail = |what: &str| rep.failures.push(format!("trial {done} in {}: {what}", fam.id));

        let mut rhs = add(&alg.pow(&a, p), &alg.pow(&b, p), f);
        for s in jacobson_terms(alg, &a, &b) {
            rhs = add(&rhs, &s, f);
        }
        if alg.pow(&add(&a, &b, f), p) != rhs {
            fail("(a+b)^p expansion");
        }
        if ad_l(alg, &a, &b, p) != alg.commutator(&alg.pow(&a, p), &b) {
            fail("(ad_L a)^p(b) = [a^p, b]");
        }
        if ad_r(alg, &a, &b, p) != alg.commutator(&a, &alg.pow(&b, p)) {
            fail("(a)(ad_R b)^p = [a, b^p]");
        }
        let mut sum_l = vec![Fe::ZERO; dim];
        let mut sum_r = vec![Fe::ZERO; dim];
        for i in 0..p {
            sum_l = add(&sum_l, &alg.mul(&alg.mul(&alg.pow(&a, i), &b), &alg.pow(&a, p - 1 - i)), f);
            sum_r = add(&sum_r, &alg.mul(&alg.mul(&alg.pow(&b, p - 1 - i), &a), &alg.pow(&b, i)), f);
        }
        if ad_l(alg, &a, &b, p - 1) != sum_l {
            fail("(ad_L a)^(p-1)(b) as a sum");
        }
        if ad_r(alg, &a, &b, p - 1) != sum_r {
            fail("(a)(ad_R b)^(p-1) as a sum");
        }
    }
}

/// Completes `relations` over the generators listed in ascending order
/// with the given weights.
fn algebra(
    f: &Field,
    names: &[&str],
    weights: Vec<u32>,
    relations: &[String],
    env: &PolyEnv,
) -> Result<FinAlgebra, String> {
    let a = Alphabet::new(names).map_err(|e| e.to_string())?.with_weights(weights);
    let rels = relations
        .iter()
        .map(|r| parse_poly(r, &a, env, f))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let (sys, status) =
        complete(&a, f, &rels, default_degree_cap(&rels)).map_err(|e| format!("{e:?}"))?;
    if status != CompletionStatus::Confluent {
        return Err("completion did not finish".into());
    }
    FinAlgebra::from_confluent(&sys, 1 << 12).map_err(|e| e.to_string())
}

fn lemma210(f: &Field, trials: usize, rng: &mut ChaCha8Rng, rep: &mut IdentityReport) {
    let p = f.p() as usize;
    let env = PolyEnv {
        integer_literals: true,
        ..Default::default()
    };
    let mut cache: HashMap<usize, Result<FinAlgebra, String>> = HashMap::new();
    for t in 0..trials {
        let n = p * rng.gen_range(1..=3);
        let alg = cache.entry(n).or_insert_with(|| {
            let rels = vec![
                format!("g^{n} - 1"),
                "gx - xg - g(1 - g)".to_string(),
                format!("x^{} - x^{p}", p * p),
            ];
            let alg = algebra(f, &["x", "g"], vec![1, 0], &rels, &env);
            let dim = alg.as_ref().map_or(0, |a| a.dim());
            rep.algebras.push(format!("n={n} dim {dim}"));
            alg
        });
        let alg = match alg {
            Ok(a) => a,
            Err(e) => {
                rep.failures.push(format!("trial {t}: n={n}: {e}"));
                continue;
            }
        };
        let mut fail = |what: String| rep.failures.push(format!("trial {t} n={n}: {what}"));
        if alg.dim() != n * p * p {
            fail(format!("dimension {} instead of {}", alg.dim(), n * p * p));
            continue;
        }
        let a = alg.alphabet().clone();
        let x = alg.word_vec(&a.word("x").unwrap());
        let g = alg.word_vec(&a.word("g").unwrap());
        let i = rng.gen_range(0..n);
        let gi = alg.pow(&g, i);
        let gi1 = alg.pow(&g, i + 1);
        let ic = f.from_int(i as i64);
        let rhs = sub(&add(&alg.mul(&x, &gi), &scale(&gi, ic, f), f), &scale(&gi1, ic, f), f);
        if alg.mul(&gi, &x) != rhs {
            fail(format!("g^{i} x"));
        }
        let gp = alg.pow(&g, p);
        if alg.mul(&gp, &x) != alg.mul(&x, &gp) {
            fail("g^p x = x g^p".into());
        }
        let g_minus_gp = sub(&g, &gp, f);
        let gx = alg.commutator(&g, &x);
        if ad_r(alg, &g, &x, p - 1) != g_minus_gp {
            fail("(g)(ad_R x)^(p-1)".into());
        }
        if ad_r(alg, &g, &x, p) != gx {
            fail("(g)(ad_R x)^p".into());
        }
        if ad_l(alg, &x, &g, p - 1) != g_minus_gp {
            fail("(ad_L x)^(p-1)(g)".into());
        }
        let xg = alg.commutator(&x, &g);
        let adp = ad_l(alg, &x, &g, p);
        if alg.commutator(&alg.pow(&x, p), &g) != adp || adp != xg {
            fail("[x^p, g] = (ad_L x)^p(g) = [x, g]".into());
        }
    }
}

fn lemma211(f: &Field, trials: usize, rng: &mut ChaCha8Rng, rep: &mut IdentityReport) {
    let p = f.p() as usize;
    let rels = [
        "g^p - 1",
        "gx - xg - l1*(g - g^2)",
        "gy - yg - l2*(g - g^(mu+1))",
        "x^p - l1*x",
        "y^p - l2*y",
        "xy - yx + mu*l1*y - l2*x - l3*(1 - g^(mu+1))",
    ]
    .map(String::from);
    let mut cache: HashMap<(u16, u16, u16, usize), Result<FinAlgebra, String>> = HashMap::new();
    for t in 0..trials {
        let l1 = Fe(rng.gen_range(0..2));
        let l2 = Fe(rng.gen_range(0..2));
        let l3 = Fe(rng.gen_range(0..f.order()) as u16);
        let mu = rng.gen_range(1..p);
        let n = rng.gen_range(1..=2 * p);
        let alg = cache.entry((l1.0, l2.0, l3.0, mu)).or_insert_with(|| {
            let mut env = PolyEnv {
                integer_literals: true,
                ..Default::default()
            };
            env.params.insert("p".into(), Scalar::Int(p as i64));
            env.params.insert("mu".into(), Scalar::Int(mu as i64));
            env.params.insert("l1".into(), Scalar::Elem(l1));
            env.params.insert("l2".into(), Scalar::Elem(l2));
            env.params.insert("l3".into(), Scalar::Elem(l3));
            let alg = algebra(f, &["y", "x", "g"], vec![1, 1, 0], &rels, &env);
            let dim = alg.as_ref().map_or(0, |a| a.dim());
            rep.algebras.push(format!("l1={l1} l2={l2} l3={l3} mu={mu} dim {dim}"));
            alg
        });
        let alg = match alg {
            Ok(a) => a,
            Err(e) => {
                rep.failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let a = alg.alphabet().clone();
        let x = alg.word_vec(&a.word("x").unwrap());
        let y = alg.word_vec(&a.word("y").unwrap());
        let g = alg.word_vec(&a.word("g").unwrap());
        let gm = alg.pow(&g, mu + 1);
        let xy = alg.commutator(&x, &y);

        let mut rhs = scale(&xy, powz(f, l2, n - 1), f);
        for i in 0..n.saturating_sub(1) {
            let term = ad_r(alg, &gm, &y, n - 1 - i);
            rhs = sub(&rhs, &scale(&term, f.mul(l3, powz(f, l2, i)), f), f);
        }
        if ad_r(alg, &x, &y, n) != rhs {
            rep.failures.push(format!(
                "trial {t}: (x)(ad_R y)^{n} with l1={l1} l2={l2} l3={l3} mu={mu}"
            ));
        }

        let c = f.neg(f.mul(f.from_int(mu as i64), l1));
        let mut rhs = scale(&xy, powz(f, c, n - 1), f);
        for i in 0..n.saturating_sub(1) {
            let term = ad_l(alg, &x, &gm, n - 1 - i);
            rhs = sub(&rhs, &scale(&term, f.mul(l3, powz(f, c, i)), f), f);
        }
        if ad_l(alg, &x, &y, n) != rhs {
            rep.failures.push(format!(
                "trial {t}: (ad_L x)^{n}(y) with l1={l1} l2={l2} l3={l3} mu={mu}"
            ));
        }
    }
}
