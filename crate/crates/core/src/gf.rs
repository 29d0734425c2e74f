//! Exact arithmetic in GF(p^k) and dense linear algebra over it.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits
//! (least significant first) are the coefficients of a polynomial in the
//! field generator `t`. In GF(4), `t` is `2` and `t + 1` is `3`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("unsupported field GF({p}^{k}): need p in {{2,3,5}}, 1 <= k <= 8 and p^k <= 6561")]
    Unsupported { p: u32, k: u32 },
    #[error("no modulus recorded for GF({p}^{k})")]
    MissingModulus { p: u32, k: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not in the field")]
    OutOfRange(u32),
}

/// Largest supported field order.
pub const MAX_ORDER: u32 = 6561;

/// A field element in the integer encoding described at module level.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Monic irreducible moduli, constant coefficient first.
/// These are the Conway polynomials for each `(p, k)`.
const MODULI: &[(u32, u32, &[u16])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
];

/// Returns the recorded modulus for `(p, k)`, constant coefficient first.
pub fn modulus_for(p: u32, k: u32) -> Option<&'static [u16]> {
    MODULI
        .iter()
        .find(|(pp, kk, _)| *pp == p && *kk == k)
        .map(|(_, _, m)| *m)
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u16>,
    /// `exp[i] = w^i` for a primitive element `w`, doubled in length.
    exp: Vec<u16>,
    /// `log[a]` for `a != 0`.
    log: Vec<u16>,
    neg: Vec<u16>,
    /// Full addition table when `q` is small and `p` is odd.
    add: Option<Vec<u16>>,
}

/// A finite field GF(p^k). Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(a % p);
        a /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Schoolbook product of two encoded elements reduced by `modulus`.
fn slow_mul(a: u32, b: u32, p: u32, k: u32, modulus: &[u16]) -> u32 {
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let k = k as usize;
    let mut prod = vec![0u32; 2 * k];
    for i in 0..k {
        for j in 0..k {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate().take(k) {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u32 % p) % p;
            }
            prod[deg] = 0;
        }
    }
    undigits(&prod[..k], p)
}

/// Builds GF(p^k) with the fixed modulus from the internal table.
/// Fields are cached, so repeated calls are cheap.
pub fn make_field(p: u32, k: u32) -> Result<Field, GfError> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
        return Ok(f.clone());
    }
    let f = build_field(p, k)?;
    cache.lock().unwrap().insert((p, k), f.clone());
    Ok(f)
}

fn build_field(p: u32, k: u32) -> Result<Field, GfError> {
    if ![2, 3, 5].contains(&p) || !(1..=8).contains(&k) {
        return Err(GfError::Unsupported { p, k });
    }
    let q = p.pow(k);
    if q > MAX_ORDER {
        return Err(GfError::Unsupported { p, k });
    }
    let modulus = modulus_for(p, k).ok_or(GfError::MissingModulus { p, k })?;

    // Smallest primitive element: w^(order/r) != 1 for every prime r | order.
    let order = q - 1;
    let pow_slow = |mut b: u32, mut e: u32| {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(acc, b, p, k, modulus);
            }
            b = slow_mul(b, b, p, k, modulus);
            e >>= 1;
        }
        acc
    };
    let mut prime_factors = Vec::new();
    let mut n = order;
    let mut r = 2;
    while r * r <= n {
        if n % r == 0 {
            prime_factors.push(r);
            while n % r == 0 {
                n /= r;
            }
        }
        r += 1;
    }
    if n > 1 {
        prime_factors.push(n);
    }
    let w = (1..q)
        .find(|&c| prime_factors.iter().all(|&r| pow_slow(c, order / r) != 1))
        .expect("an irreducible modulus always yields a cyclic unit group");
    let mut exp = vec![0u16; 2 * order as usize];
    let mut log = vec![0u16; q as usize];
    let mut x = 1u32;
    for i in 0..order as usize {
        exp[i] = x as u16;
        exp[i + order as usize] = x as u16;
        log[x as usize] = i as u16;
        x = slow_mul(x, w, p, k, modulus);
    }
    let neg = (0..q)
        .map(|a| {
            let d: Vec<u32> = digits(a, p, k).iter().map(|&c| (p - c) % p).collect();
            undigits(&d, p) as u16
        })
        .collect();
    let add = if p != 2 && q <= 1024 {
        let mut t = vec![0u16; (q * q) as usize];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                t[(a * q + b) as usize] = undigits(&s, p) as u16;
            }
        }
        Some(t)
    } else {
        None
    };
    Ok(Field(Arc::new(FieldData {
        p,
        k,
        q,
        modulus: modulus.to_vec(),
        exp,
        log,
        neg,
        add,
    })))
}

impl Field {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u16] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(|a| Fe(a as u16))
    }

    /// Elements of the prime subfield.
    pub fn prime_subfield(&self) -> Vec<Fe> {
        (0..self.0.p).map(|a| Fe(a as u16)).collect()
    }

    pub fn elem(&self, code: u32) -> Result<Fe, GfError> {
        if code < self.0.q {
            Ok(Fe(code as u16))
        } else {
            Err(GfError::OutOfRange(code))
        }
    }

    /// Image of an integer under the ring map Z -> F.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.0.p as i64) as u16)
    }

    /// The field generator `t` (equal to `p` in the encoding), or `1` when k = 1.
    pub fn generator(&self) -> Fe {
        if self.0.k == 1 {
            Fe::ONE
        } else {
            Fe(self.0.p as u16)
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let d = &*self.0;
        if d.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if let Some(t) = &d.add {
            return Fe(t[a.0 as usize * d.q as usize + b.0 as usize]);
        }
        let (mut x, mut y) = (a.0 as u32, b.0 as u32);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..d.k {
            out += ((x % d.p + y % d.p) % d.p) * place;
            x /= d.p;
            y /= d.p;
            place *= d.p;
        }
        Fe(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let d = &*self.0;
        Fe(d.exp[d.log[a.0 as usize] as usize + d.log[b.0 as usize] as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let d = &*self.0;
        let order = d.q as usize - 1;
        Ok(Fe(d.exp[(order - d.log[a.0 as usize] as usize) % order]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with `0^0 = 1`; negative exponents invert.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe, GfError> {
        if e == 0 {
            return Ok(Fe::ONE);
        }
        if a.is_zero() {
            return if e > 0 { Ok(Fe::ZERO) } else { Err(GfError::DivisionByZero) };
        }
        let d = &*self.0;
        let order = d.q as i64 - 1;
        let l = (d.log[a.0 as usize] as i64 * e.rem_euclid(order)) % order;
        Ok(Fe(d.exp[l as usize]))
    }

    /// Evaluates a polynomial given by ascending coefficients.
    pub fn eval_poly(&self, coeffs: &[Fe], x: Fe) -> Fe {
        coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

/// All roots of a univariate polynomial (ascending coefficients) by scanning
/// the field. The zero polynomial has every element as a root.
pub fn roots_univariate(coeffs: &[Fe], f: &Field) -> Vec<Fe> {
    f.elements()
        .filter(|&x| f.eval_poly(coeffs, x).is_zero())
        .collect()
}

/// Dense row-major matrix of field elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fe>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<Fe>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fe], f: &Field) -> Vec<Fe> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v, f))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

pub fn dot(a: &[Fe], b: &[Fe], f: &Field) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += c * x`
pub fn axpy(y: &mut [Fe], c: Fe, x: &[Fe], f: &Field) {
    if c.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(c, xi));
        }
    }
}

pub fn scale(v: &mut [Fe], c: Fe, f: &Field) {
    for x in v.iter_mut() {
        *x = f.mul(*x, c);
    }
}

/// Reduces `m` to reduced row echelon form in place using the first
/// nonzero entry of each column as pivot. Returns the pivot columns.
pub fn rref(m: &mut Matrix, f: &Field) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                m.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in c..cols {
            let v = m.get(r, j);
            m.set(r, j, f.mul(v, inv));
        }
        let pivot_row: Vec<Fe> = m.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c);
            if factor.is_zero() {
                continue;
            }
            let nf = f.neg(factor);
            let row = &mut m.data[i * cols + c..(i + 1) * cols];
            axpy(row, nf, &pivot_row, f);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, f: &Field) -> usize {
    let mut work = m.clone();
    rref(&mut work, f).len()
}

/// Rank and a basis of the right nullspace `{v : M v = 0}`.
pub fn rank_nullspace(m: &Matrix, f: &Field) -> (usize, Vec<Vec<Fe>>) {
    let mut work = m.clone();
    let pivots = rref(&mut work, f);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Fe::ZERO; m.cols];
        v[free] = Fe::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(work.get(r, free));
        }
        basis.push(v);
    }
    (pivots.len(), basis)
}

/// One solution of `M x = b`, if any.
pub fn solve(m: &Matrix, b: &[Fe], f: &Field) -> Option<Vec<Fe>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, m.cols, b[i]);
    }
    let pivots = rref(&mut aug, f);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Fe::ZERO; m.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(r, m.cols);
    }
    Some(x)
}

/// Incrementally maintained echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    /// Normalized rows, each with a leading one at `pivots[i]`.
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut [Fe], f: &Field) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                axpy(v, f.neg(c), row, f);
            }
        }
    }

    pub fn contains(&self, v: &[Fe], f: &Field) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Fe], f: &Field) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("nonzero");
        scale(&mut w, inv, f);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                axpy(row, f.neg(c), &w, f);
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_generator_relation() {
        let f = make_field(2, 2).unwrap();
        let t = Fe(2);
        assert_eq!(f.mul(t, t), f.add(t, Fe::ONE));
        assert_eq!(f.mul(t, Fe(3)), Fe::ONE);
        assert_eq!(f.pow(t, 3).unwrap(), Fe::ONE);
    }

    #[test]
    fn unsupported_fields_rejected() {
        assert!(make_field(7, 1).is_err());
        assert!(make_field(5, 6).is_err());
        assert!(make_field(2, 9).is_err());
        assert!(make_field(2, 0).is_err());
    }
}
