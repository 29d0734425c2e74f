//! Braided vector spaces and graded dimensions of Nichols algebras.
//!
//! `dim B^n(V)` is the rank of the quantum symmetrizer `Ω_n`, the sum over
//! `S_n` of the braid lifts along reduced words. `Ω_n` is computed through
//! the coset factorization `Ω_n = (Ω_{n-1} ⊗ id)(1 + c_{n-1} + c_{n-1}c_{n-2}
//! + ... + c_{n-1}⋯c_1)`; [`symmetrizer_by_permutations`] sums the
//! permutations one by one and serves as a reference for small `n`.

use thiserror::Error;

use crate::findim::{to_dense, Sparse};
use crate::gf::{rank, Echelon, Fe, Field, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("braiding does not satisfy the braid equation")]
    BraidEquation,
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("V^{{⊗{n}}} has dimension {size}, budget is {budget}")]
    Budget { n: usize, size: u64, budget: u64 },
    #[error("invalid module data: {0}")]
    Module(String),
    #[error("cannot parse braided space {0:?}")]
    Spec(String),
}

/// Default bound on `dim V^{⊗n}`.
pub const DEFAULT_BUDGET: u64 = 10_000;

/// A braided vector space `(V, c)`; `c` acts on `V⊗V` with basis `e_i⊗e_j`
/// at index `i * m + j`, column `i * m + j` holding `c(e_i⊗e_j)`.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    pub m: usize,
    pub field: Field,
    pub c: Matrix,
    /// Sparse columns of `c`.
    cols: Vec<Sparse>,
}

/// A Yetter-Drinfeld module over an abelian group `Z_{n_1} × ... × Z_{n_r}`
/// with homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    pub group: Vec<u32>,
    /// One `m × m` matrix per group generator; column `j` is `g·v_j`.
    pub action: Vec<Matrix>,
    /// Degree of each basis vector as exponents of the group generators.
    pub degrees: Vec<Vec<u32>>,
}

impl YdModule {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// `M_{i,r}` over `C_n`: `g·v_1 = v_1`, `g·v_k = v_k + v_{k-1}`, all of degree `g^i`.
    pub fn cyclic(i: u32, r: usize, n: u32) -> YdModule {
        let mut a = Matrix::identity(r);
        for j in 1..r {
            a.set(j - 1, j, Fe::ONE);
        }
        YdModule {
            group: vec![n],
            action: vec![a],
            degrees: vec![vec![i % n]; r],
        }
    }

    /// Two-dimensional module over `C2 × C2 = ⟨g⟩ × ⟨h⟩`: `g·y = y + x`,
    /// `h·y = y + λx`, both basis vectors of degree `g^k h^l`.
    pub fn bashev(k: u32, l: u32, lambda: Fe) -> YdModule {
        let mut g = Matrix::identity(2);
        g.set(0, 1, Fe::ONE);
        let mut h = Matrix::identity(2);
        h.set(0, 1, lambda);
        YdModule {
            group: vec![2, 2],
            action: vec![g, h],
            degrees: vec![vec![k % 2, l % 2]; 2],
        }
    }

    pub fn direct_sum(&self, other: &YdModule) -> Result<YdModule, NicholsError> {
        if self.group != other.group {
            return Err(NicholsError::Module("summands over different groups".into()));
        }
        let (m1, m2) = (self.dim(), other.dim());
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut s = Matrix::zeros(m1 + m2, m1 + m2);
                for i in 0..m1 {
                    for j in 0..m1 {
                        s.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..m2 {
                    for j in 0..m2 {
                        s.set(m1 + i, m1 + j, b.get(i, j));
                    }
                }
                s
            })
            .collect();
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        Ok(YdModule {
            group: self.group.clone(),
            action,
            degrees,
        })
    }

    /// Action matrix of the group element with the given exponents.
    pub fn element_action(&self, exps: &[u32], f: &Field) -> Matrix {
        let mut out = Matrix::identity(self.dim());
        for (a, &e) in self.action.iter().zip(exps) {
            for _ in 0..e {
                out = out.mul(a, f);
            }
        }
        out
    }

    /// Checks shapes, group relations, commutation of the action and
    /// compatibility `δ(g·v) = g v_{(-1)} g⁻¹ ⊗ g·v_{(0)}`, which for an
    /// abelian group says the action preserves degrees.
    pub fn validate(&self, f: &Field) -> Result<(), NicholsError> {
        let m = self.dim();
        let r = self.group.len();
        if self.action.len() != r || self.degrees.iter().any(|d| d.len() != r) {
            return Err(NicholsError::Module("shape mismatch".into()));
        }
        for (t, a) in self.action.iter().enumerate() {
            if a.rows != m || a.cols != m {
                return Err(NicholsError::Module("action matrix shape".into()));
            }
            let mut e = vec![0; r];
            e[t] = self.group[t];
            if self.element_action(&e, f) != Matrix::identity(m) {
                return Err(NicholsError::Module(format!(
                    "generator {t} does not have order dividing {}",
                    self.group[t]
                )));
            }
            for b in &self.action {
                if a.mul(b, f) != b.mul(a, f) {
                    return Err(NicholsError::Module("action matrices do not commute".into()));
                }
            }
            for j in 0..m {
                for i in 0..m {
                    if !a.get(i, j).is_zero() && self.degrees[i] != self.degrees[j] {
                        return Err(NicholsError::Module(format!(
                            "compatibility fails: generator {t} moves v{} out of its degree",
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl BraidedSpace {
    /// Wraps a braiding matrix after checking invertibility and the braid equation.
    pub fn new(m: usize, field: Field, c: Matrix) -> Result<BraidedSpace, NicholsError> {
        assert_eq!((c.rows, c.cols), (m * m, m * m));
        if rank(&c, &field) != m * m {
            return Err(NicholsError::NotInvertible);
        }
        let v = Self::unchecked(m, field, c);
        if !v.check_braid_equation() {
            return Err(NicholsError::BraidEquation);
        }
        Ok(v)
    }

    /// Wraps a matrix without any check.
    pub fn unchecked(m: usize, field: Field, c: Matrix) -> BraidedSpace {
        let cols = (0..m * m)
            .map(|j| crate::findim::to_sparse(&c.col(j)))
            .collect();
        BraidedSpace { m, field, c, cols }
    }

    /// `c(x_i⊗x_j) = q_{ij} x_j⊗x_i`.
    pub fn diagonal(q: &Matrix, f: &Field) -> Result<BraidedSpace, NicholsError> {
        let m = q.rows;
        if q.cols != m || q.data.iter().any(|x| x.is_zero()) {
            return Err(NicholsError::Module("diagonal entries must be nonzero".into()));
        }
        let mut c = Matrix::zeros(m * m, m * m);
        for i in 0..m {
            for j in 0..m {
                c.set(j * m + i, i * m + j, q.get(i, j));
            }
        }
        Self::new(m, f.clone(), c)
    }

    /// Jordan type: `c(x_i⊗x_1) = s x_1⊗x_i`, `c(x_i⊗x_j) = (s x_j + x_{j-1})⊗x_i`.
    pub fn jordan(s: Fe, m: usize, f: &Field) -> Result<BraidedSpace, NicholsError> {
        if s.is_zero() {
            return Err(NicholsError::Module("jordan parameter must be nonzero".into()));
        }
        let mut c = Matrix::zeros(m * m, m * m);
        for i in 0..m {
            for j in 0..m {
                c.set(j * m + i, i * m + j, s);
                if j > 0 {
                    c.set((j - 1) * m + i, i * m + j, Fe::ONE);
                }
            }
        }
        Self::new(m, f.clone(), c)
    }

    /// `c(v_i⊗v_j) = (deg(v_i)·v_j)⊗v_i`.
    pub fn from_yd(module: &YdModule, f: &Field) -> Result<BraidedSpace, NicholsError> {
        module.validate(f)?;
        let m = module.dim();
        let mut c = Matrix::zeros(m * m, m * m);
        for i in 0..m {
            let a = module.element_action(&module.degrees[i], f);
            for j in 0..m {
                for k in 0..m {
                    c.set(k * m + i, i * m + j, a.get(k, j));
                }
            }
        }
        Self::new(m, f.clone(), c)
    }

    /// Parses `diagonal:q11,q12;q21,q22`, `trivial:m`, `jordan:s,m`,
    /// `yd-cyclic:i,r,n` (`M_{i,r}` over `C_n`) and `bashev:k,l,lambda`.
    /// Module specs may be joined with `+` for direct sums. Field entries
    /// are element encodings.
    pub fn parse(spec: &str, f: &Field) -> Result<BraidedSpace, NicholsError> {
        let bad = || NicholsError::Spec(spec.to_string());
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
        let elem = |s: &str| f.elem(num(s)?).map_err(|_| bad());
        let (kind, args) = spec.trim().split_once(':').ok_or_else(bad)?;
        match kind {
            "diagonal" => {
                let rows: Vec<Vec<Fe>> = args
                    .split(';')
                    .map(|r| r.split(',').map(elem).collect::<Result<_, _>>())
                    .collect::<Result<_, _>>()?;
                if rows.iter().any(|r| r.len() != rows.len()) {
                    return Err(bad());
                }
                Self::diagonal(&Matrix::from_rows(&rows), f)
            }
            "trivial" => {
                let m = num(args)? as usize;
                let mut q = Matrix::zeros(m, m);
                q.data.iter_mut().for_each(|x| *x = Fe::ONE);
                Self::diagonal(&q, f)
            }
            "jordan" => {
                let v: Vec<&str> = args.split(',').collect();
                if v.len() != 2 {
                    return Err(bad());
                }
                Self::jordan(elem(v[0])?, num(v[1])? as usize, f)
            }
            _ => {
                let mut module: Option<YdModule> = None;
                for part in spec.split('+') {
                    let (kind, args) = part.trim().split_once(':').ok_or_else(bad)?;
                    let v: Vec<&str> = args.split(',').collect();
                    let next = match (kind, v.len()) {
                        ("yd-cyclic", 3) => {
                            YdModule::cyclic(num(v[0])?, num(v[1])? as usize, num(v[2])?)
                        }
                        ("bashev", 3) => YdModule::bashev(num(v[0])?, num(v[1])?, elem(v[2])?),
                        _ => return Err(bad()),
                    };
                    module = Some(match module {
                        None => next,
                        Some(prev) => prev.direct_sum(&next)?,
                    });
                }
                Self::from_yd(&module.ok_or_else(bad)?, f)
            }
        }
    }

    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V⊗³`.
    pub fn check_braid_equation(&self) -> bool {
        let size = self.m.pow(3);
        (0..size).all(|e| {
            let v = unit_sparse(e);
            let left = self.apply_c(&self.apply_c(&self.apply_c(&v, 3, 0), 3, 1), 3, 0);
            let right = self.apply_c(&self.apply_c(&self.apply_c(&v, 3, 1), 3, 0), 3, 1);
            left == right
        })
    }

    /// `c_{pos+1} = id^{⊗pos} ⊗ c ⊗ id` applied to a vector of `V^{⊗n}`.
    /// Indices are base-`m` numbers with the first tensor factor most significant.
    pub fn apply_c(&self, v: &Sparse, n: usize, pos: usize) -> Sparse {
        let m = self.m as u64;
        let f = &self.field;
        let low = m.pow((n - pos - 2) as u32);
        let mut acc: std::collections::BTreeMap<u32, Fe> = std::collections::BTreeMap::new();
        for &(idx, x) in v {
            let idx = idx as u64;
            let pair = (idx / low) % (m * m);
            let base = idx - pair * low;
            for &(k, y) in &self.cols[pair as usize] {
                let out = (base + k as u64 * low) as u32;
                let e = acc.entry(out).or_insert(Fe::ZERO);
                *e = f.add(*e, f.mul(x, y));
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Applies the lift of a word `s_{w_1} s_{w_2} ⋯` (rightmost acts first).
    pub fn apply_word(&self, v: &Sparse, n: usize, word: &[usize]) -> Sparse {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, &i| self.apply_c(&acc, n, i))
    }
}

fn unit_sparse(i: usize) -> Sparse {
    vec![(i as u32, Fe::ONE)]
}

fn check_budget(m: usize, n: usize, budget: u64) -> Result<usize, NicholsError> {
    let size = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if size > budget {
        return Err(NicholsError::Budget { n, size, budget });
    }
    Ok(size as usize)
}

/// `Ω_n` as a list of sparse columns of length `m^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrizer {
    pub n: usize,
    pub size: usize,
    pub cols: Vec<Sparse>,
}

impl Symmetrizer {
    pub fn to_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Fe>> = self.cols.iter().map(|c| to_dense(c, self.size)).collect();
        Matrix::from_cols(self.size, &cols)
    }

    /// Rank over `f`.
    pub fn rank(&self, f: &Field) -> usize {
        let mut ech = Echelon::new(self.size);
        for c in &self.cols {
            if !c.is_empty() {
                ech.insert(&to_dense(c, self.size), f);
            }
        }
        ech.dim()
    }
}

/// Quantum symmetrizer via the coset factorization.
pub fn quantum_symmetrizer(
    v: &BraidedSpace,
    n: usize,
    budget: u64,
) -> Result<Symmetrizer, NicholsError> {
    assert!(n >= 1);
    check_budget(v.m, n, budget)?;
    let mut omega = Symmetrizer {
        n: 1,
        size: v.m,
        cols: (0..v.m).map(unit_sparse).collect(),
    };
    for _ in 2..=n {
        omega = next_symmetrizer(v, &omega);
    }
    Ok(omega)
}

/// `Ω_{k+1}` from `Ω_k`.
fn next_symmetrizer(v: &BraidedSpace, prev: &Symmetrizer) -> Symmetrizer {
    let f = &v.field;
    let m = v.m;
    let k = prev.n + 1;
    let size = prev.size * m;
    let cols = (0..size)
        .map(|e| {
            let unit = unit_sparse(e);
            // Horner form of 1 + c_{k-1} + c_{k-1}c_{k-2} + ... + c_{k-1}⋯c_1.
            let mut t = unit.clone();
            for pos in 0..k - 1 {
                t = sparse_add(&v.apply_c(&t, k, pos), &unit, f);
            }
            // (Ω_{k-1} ⊗ id) t.
            let mut acc = vec![Fe::ZERO; size];
            for &(idx, x) in &t {
                let (a, b) = (idx as usize / m, idx as usize % m);
                for &(r, y) in &prev.cols[a] {
                    let o = &mut acc[r as usize * m + b];
                    *o = f.add(*o, f.mul(x, y));
                }
            }
            crate::findim::to_sparse(&acc)
        })
        .collect();
    Symmetrizer { n: k, size, cols }
}

fn sparse_add(a: &Sparse, b: &Sparse, f: &Field) -> Sparse {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            let s = f.add(a[i].1, b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A reduced word for `perm` (one-line notation on `0..n`) by bubble sort:
/// adjacent transpositions `s_i` (swapping positions `i`, `i+1`) such that
/// `perm = s_{w_1} s_{w_2} ⋯`.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else {
            break;
        };
        p.swap(i, i + 1);
        word.push(i);
    }
    word
}

/// A second reduced word, found by sorting from the right.
pub fn reduced_word_right(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..p.len().saturating_sub(1))
            .rev()
            .find(|&i| p[i] > p[i + 1])
        else {
            break;
        };
        p.swap(i, i + 1);
        word.push(i);
    }
    word
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// `Ω_n` as the explicit sum of lifts over all of `S_n`.
pub fn symmetrizer_by_permutations(v: &BraidedSpace, n: usize) -> Symmetrizer {
    let f = &v.field;
    let size = v.m.pow(n as u32);
    let words: Vec<Vec<usize>> = permutations(n).iter().map(|p| reduced_word(p)).collect();
    let cols = (0..size)
        .map(|e| {
            let unit = unit_sparse(e);
            words
                .iter()
                .fold(Vec::new(), |acc, w| sparse_add(&acc, &v.apply_word(&unit, n, w), f))
        })
        .collect();
    Symmetrizer { n, size, cols }
}

/// Graded dimensions of `B(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicholsDims {
    /// `graded[n] = dim B^n(V)`, starting with `graded[0] = 1`.
    pub graded: Vec<usize>,
    /// Sum of `graded`; exact when `closed`, a lower bound otherwise.
    pub total: usize,
    /// A zero rank was reached at or below `n_max`.
    pub closed: bool,
}

/// Ranks of `Ω_1..Ω_{n_max}`, computed while `m^n` stays within the budget.
/// `closed` means some rank vanished and every later computed rank did too.
/// Degrees past the budget are then filled with zeros, since `Ω_{n+1}`
/// factors through `Ω_n ⊗ id`; without closure the result is truncated and
/// `total` is a lower bound.
pub fn nichols_dims(v: &BraidedSpace, n_max: usize, budget: u64) -> Result<NicholsDims, NicholsError> {
    let f = &v.field;
    check_budget(v.m, 1, budget)?;
    let mut graded = vec![1];
    let (mut closed, mut zero_seen, mut reopened) = (false, false, false);
    let mut omega = quantum_symmetrizer(v, 1, budget)?;
    for n in 1..=n_max {
        if n > 1 {
            if check_budget(v.m, n, budget).is_err() {
                if closed {
                    graded.resize(n_max + 1, 0);
                }
                break;
            }
            omega = next_symmetrizer(v, &omega);
        }
        let r = omega.rank(f);
        graded.push(r);
        if r == 0 {
            zero_seen = true;
        } else if zero_seen {
            reopened = true;
        }
        closed = zero_seen && !reopened;
    }
    let total = graded.iter().sum();
    Ok(NicholsDims {
        graded,
        total,
        closed,
    })
}

/// Coefficients of `((1 - t^p)/(1 - t))^m`, the Hilbert series of the
/// truncated polynomial ring `k[x_1..x_m]/(x_i^p)`.
pub fn truncated_hilbert_series(p: usize, m: usize) -> Vec<usize> {
    let mut out = vec![1usize];
    for _ in 0..m {
        let mut next = vec![0; out.len() + p - 1];
        for (i, &c) in out.iter().enumerate() {
            for j in 0..p {
                next[i + j] += c;
            }
        }
        out = next;
    }
    out
}
