use hopfbench::gf::{make_field, rank, rank_nullspace, rref, solve, Echelon, Fe, Field, Matrix};
use proptest::prelude::*;

const FIELDS: &[(u32, u32)] = &[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)];

/// Schoolbook arithmetic on base-p digit vectors, reduced by the field's modulus.
fn digits(f: &Field, a: Fe) -> Vec<u32> {
    let p = f.p();
    let mut c = a.0 as u32;
    (0..f.k())
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn encode(f: &Field, d: &[u32]) -> Fe {
    Fe(d.iter().rev().fold(0u32, |acc, &x| acc * f.p() + x) as u16)
}

fn oracle_mul(f: &Field, a: Fe, b: Fe) -> Fe {
    let p = f.p();
    let k = f.k() as usize;
    let (da, db) = (digits(f, a), digits(f, b));
    let mut prod = vec![0u32; 2 * k];
    for i in 0..k {
        for j in 0..k {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let m: Vec<u32> = f.modulus().iter().map(|&c| c as u32).collect();
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // subtract c * x^(deg-k) * modulus; modulus is monic of degree k
        for (i, &mi) in m.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + p * p - (c * mi) % p) % p;
        }
    }
    encode(f, &prod[..k])
}

fn oracle_add(f: &Field, a: Fe, b: Fe) -> Fe {
    let (da, db) = (digits(f, a), digits(f, b));
    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % f.p()).collect();
    encode(f, &s)
}

#[test]
fn tables_match_polynomial_arithmetic() {
    for &(p, k) in FIELDS {
        let f = make_field(p, k).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), oracle_add(&f, a, b), "{f} {a:?}+{b:?}");
                assert_eq!(f.mul(a, b), oracle_mul(&f, a, b), "{f} {a:?}*{b:?}");
            }
        }
    }
}

#[test]
fn conway_root_is_primitive() {
    for &(p, k) in FIELDS.iter().filter(|fk| fk.1 > 1) {
        let f = make_field(p, k).unwrap();
        let g = f.generator();
        let n = f.order() - 1;
        let mut seen = std::collections::HashSet::new();
        let mut x = Fe::ONE;
        for _ in 0..n {
            seen.insert(x);
            x = f.mul(x, g);
        }
        assert_eq!(x, Fe::ONE);
        assert_eq!(seen.len() as u32, n, "{f}");
    }
}

#[test]
fn prime_subfield_is_frobenius_fixed() {
    let f = make_field(3, 2).unwrap();
    let fixed: Vec<Fe> = f.elements().filter(|&a| f.pow(a, 3).unwrap() == a).collect();
    assert_eq!(fixed, f.prime_subfield());
    assert_eq!(f.from_int(-1), Fe(2));
    assert_eq!(f.from_int(7), Fe(1));
    assert!(make_field(7, 1).is_err());
}

fn arb_field() -> impl Strategy<Value = Field> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, k)| make_field(p, k).unwrap())
}

fn arb_matrix(f: Field, max: usize) -> impl Strategy<Value = (Field, Matrix)> {
    let q = f.order();
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        let f = f.clone();
        prop::collection::vec(prop::collection::vec(0..q, c), r).prop_map(move |rows| {
            let rows: Vec<Vec<Fe>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| Fe(x as u16)).collect())
                .collect();
            (f.clone(), Matrix::from_rows(&rows))
        })
    })
}

proptest! {
    #[test]
    fn field_axioms(f in arb_field(), a in 0u32..6561, b in 0u32..6561, c in 0u32..6561) {
        let q = f.order();
        let (a, b, c) = (Fe((a % q) as u16), Fe((b % q) as u16), Fe((c % q) as u16));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        let p = f.p() as i64;
        prop_assert_eq!(f.pow(f.add(a, b), p).unwrap(), f.add(f.pow(a, p).unwrap(), f.pow(b, p).unwrap()));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
            prop_assert_eq!(f.pow(a, q as i64 - 1).unwrap(), Fe::ONE);
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn rank_nullity((f, m) in arb_field().prop_flat_map(|f| arb_matrix(f, 6))) {
        let (r, null) = rank_nullspace(&m, &f);
        prop_assert_eq!(r, rank(&m, &f));
        prop_assert_eq!(r + null.len(), m.cols);
        prop_assert_eq!(r, rank(&m.transpose(), &f));
        for v in &null {
            prop_assert!(m.mul_vec(v, &f).iter().all(|x| x.is_zero()));
        }
        let mut e = m.clone();
        let pivots = rref(&mut e, &f);
        prop_assert_eq!(pivots.len(), r);
    }

    #[test]
    fn solve_recovers_consistent_systems((f, m) in arb_field().prop_flat_map(|f| arb_matrix(f, 5)), seed in any::<u64>()) {
        let q = f.order() as u64;
        let x: Vec<Fe> = (0..m.cols).map(|i| Fe(((seed >> (i * 7)) % q) as u16)).collect();
        let b = m.mul_vec(&x, &f);
        let y = solve(&m, &b, &f).expect("consistent");
        prop_assert_eq!(m.mul_vec(&y, &f), b);
    }

    #[test]
    fn echelon_span((f, m) in arb_field().prop_flat_map(|f| arb_matrix(f, 6))) {
        let mut e = Echelon::new(m.cols);
        for r in 0..m.rows {
            e.insert(m.row(r), &f);
        }
        prop_assert_eq!(e.dim(), rank(&m, &f));
        for r in 0..m.rows {
            prop_assert!(e.contains(m.row(r), &f));
        }
    }
}
