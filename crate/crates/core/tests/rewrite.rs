use hopfbench::freealg::{parse_poly, Alphabet, NcPoly, PolyEnv, Scalar, Word};
use hopfbench::gf::{make_field, rank, Fe, Field, Matrix};
use hopfbench::rewrite::{complete, default_degree_cap, CompletionStatus, RewriteSystem};
use proptest::prelude::*;

fn system(f: &Field, names: &[&str], weights: Option<Vec<u32>>, rels: &[&str], env: &PolyEnv) -> (RewriteSystem, CompletionStatus) {
    let mut a = Alphabet::new(names).unwrap();
    if let Some(w) = weights {
        a = a.with_weights(w);
    }
    let rels: Vec<NcPoly> = rels.iter().map(|r| parse_poly(r, &a, env, f).unwrap()).collect();
    complete(&a, f, &rels, default_degree_cap(&rels)).unwrap()
}

fn dim(sys: &RewriteSystem) -> Option<usize> {
    let (b, closed) = sys.enumerate_basis(1 << 14);
    closed.then_some(b.len())
}

fn ints() -> PolyEnv {
    PolyEnv {
        integer_literals: true,
        ..Default::default()
    }
}

#[test]
fn truncated_polynomial_rings() {
    let f = make_field(3, 1).unwrap();
    let (s, st) = system(&f, &["x"], None, &["x^5"], &ints());
    assert_eq!(st, CompletionStatus::Confluent);
    assert_eq!(dim(&s), Some(5));
    let (s, _) = system(&f, &["z", "y", "x"], None, &["x^3", "y^3", "z^3", "xy - yx", "xz - zx", "yz - zy"], &ints());
    assert_eq!(dim(&s), Some(27));
}

#[test]
fn free_algebra_does_not_close() {
    let f = make_field(2, 1).unwrap();
    let (s, _) = system(&f, &["y", "x"], None, &["x^2", "y^2"], &ints());
    let (b, closed) = s.enumerate_basis(100);
    assert!(!closed);
    assert!(b.len() > 100);
}

#[test]
fn inconsistent_relations_collapse_to_zero() {
    let f = make_field(2, 1).unwrap();
    let a = Alphabet::new(&["y", "x"]).unwrap();
    let rels: Vec<NcPoly> = ["xy - yx - 1", "x^2", "y^2 - y"]
        .iter()
        .map(|r| parse_poly(r, &a, &ints(), &f).unwrap())
        .collect();
    // [x, y^2] = 2y = 0 in characteristic 2, but y^2 = y forces it to equal [x, y] = 1.
    assert!(complete(&a, &f, &rels, 8).is_err());
}

#[test]
fn dihedral_item_three_has_sixteen_words() {
    let f = make_field(2, 1).unwrap();
    let (s, st) = system(
        &f,
        &["x", "h", "g"],
        Some(vec![1, 0, 0]),
        &["g^4 - 1", "h^2 - 1", "hg - g^3h", "gx - xg", "hx - xh", "x^2"],
        &ints(),
    );
    assert_eq!(st, CompletionStatus::Confluent);
    assert!(s.is_confluent());
    assert_eq!(dim(&s), Some(16));
}

/// The algebra with relations of the three-skew-primitive lemma over `C_p`.
fn three_skew(f: &Field, l: [u16; 6]) -> RewriteSystem {
    let mut env = ints();
    env.params.insert("p".into(), Scalar::Int(f.p() as i64));
    for (i, v) in l.iter().enumerate() {
        env.params.insert(format!("l{}", i + 1), Scalar::Elem(Fe(*v)));
    }
    let rels = [
        "g^p - 1",
        "gx - xg - l1*g(1 - g)",
        "gy - yg - l2*g(1 - g)",
        "gz - zg - l3*g(1 - g)",
        "x^p - l1*x",
        "y^p - l2*y",
        "z^p - l3*z",
        "xy - yx - l2*x + l1*y - l4*(1 - g^2)",
        "xz - zx - l3*x + l1*z - l5*(1 - g^2)",
        "yz - zy - l3*y + l2*z - l6*(1 - g^2)",
    ];
    let a = Alphabet::new(&["z", "y", "x", "g"]).unwrap().with_weights(vec![1, 1, 1, 0]);
    let rels: Vec<NcPoly> = rels.iter().map(|r| parse_poly(r, &a, &env, f).unwrap()).collect();
    match complete(&a, f, &rels, default_degree_cap(&rels)) {
        Ok((s, CompletionStatus::Confluent)) => s,
        other => panic!("{other:?}"),
    }
}

#[test]
fn ambiguity_condition_matters_at_five() {
    let f = make_field(5, 1).unwrap();
    // l2 l5 = 1 but l3 l4 + l1 l6 = 0: the overlap x(yz) = (xy)z is not resolvable.
    assert_eq!(dim(&three_skew(&f, [1, 1, 0, 0, 1, 0])), Some(125));
    assert_eq!(dim(&three_skew(&f, [1, 1, 0, 0, 1, 1])), Some(625));
    assert_eq!(dim(&three_skew(&f, [0, 0, 0, 1, 2, 1])), Some(625));
}

#[test]
fn ambiguity_obstruction_vanishes_for_small_primes() {
    // The Jacobi defect of x, y, z is a multiple of g^3 - 1 (and of 1 - g^2),
    // which is zero in the group algebra of C_3 (and of C_2).
    for p in [2, 3] {
        let f = make_field(p, 1).unwrap();
        let full = p.pow(4) as usize;
        assert_eq!(dim(&three_skew(&f, [1, 1, 0, 0, 1, 0])), Some(full));
        assert_eq!(dim(&three_skew(&f, [1, 0, 1, 1, 1, 0])), Some(full));
    }
}

/// Dimension of the degree-`n` part of `k<m letters>/(rels)` for homogeneous
/// quadratic `rels`, by linear algebra on the span of `u r v`.
fn graded_dim_oracle(f: &Field, m: usize, rels: &[NcPoly], n: usize) -> usize {
    let total = m.pow(n as u32);
    let index = |w: &Word| w.letters().iter().fold(0usize, |acc, &l| acc * m + l as usize);
    let mut rows = Vec::new();
    if n >= 2 {
        for left in 0..=n - 2 {
            let right = n - 2 - left;
            for u in 0..m.pow(left as u32) {
                for v in 0..m.pow(right as u32) {
                    let uw = word_of(u, left, m);
                    let vw = word_of(v, right, m);
                    for r in rels {
                        let mut row = vec![Fe::ZERO; total];
                        for (w, c) in r.sandwich(&uw, &vw).terms() {
                            row[index(w)] = c;
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return total;
    }
    total - rank(&Matrix::from_rows(&rows), f)
}

fn word_of(mut code: usize, len: usize, m: usize) -> Word {
    let mut l = vec![0u8; len];
    for i in (0..len).rev() {
        l[i] = (code % m) as u8;
        code /= m;
    }
    Word::from_letters(&l)
}

fn quadratic(m: usize) -> impl Strategy<Value = Vec<Vec<u16>>> {
    prop::collection::vec(prop::collection::vec(0u16..3, m * m), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn irreducible_words_match_ideal_codimension(m in 2usize..=3, coeffs in quadratic(3)) {
        let f = make_field(3, 1).unwrap();
        let names = ["z", "y", "x"];
        let a = Alphabet::new(&names[3 - m..]).unwrap();
        let rels: Vec<NcPoly> = coeffs
            .iter()
            .map(|cs| {
                let mut p = NcPoly::zero();
                for i in 0..m {
                    for j in 0..m {
                        p.add_term(Word::from_letters(&[i as u8, j as u8]), Fe(cs[i * m + j]), &f);
                    }
                }
                p
            })
            .filter(|p| !p.is_zero())
            .collect();
        prop_assume!(!rels.is_empty());
        let (sys, _) = complete(&a, &f, &rels, 5).unwrap();
        for n in 0..=4 {
            let count = (0..m.pow(n as u32))
                .filter(|&c| sys.is_irreducible(&word_of(c, n, m)))
                .count();
            prop_assert_eq!(count, graded_dim_oracle(&f, m, &rels, n), "degree {}", n);
        }
    }

    #[test]
    fn normal_form_is_linear_and_kills_the_ideal(
        a in prop::collection::vec((0u8..3, 0usize..5, 0u16..4), 1..6),
        b in prop::collection::vec((0u8..3, 0usize..5, 0u16..4), 1..6),
        u in prop::collection::vec(0u8..3, 0..4),
        v in prop::collection::vec(0u8..3, 0..4),
    ) {
        let f = make_field(2, 2).unwrap();
        let mut env = ints();
        env.params.insert("lambda".into(), Scalar::Elem(Fe(2)));
        let rels = ["g^4 - 1", "h^2 - 1", "hg - g^3h", "gx - xg - g + g^3", "hx - xh - lambda*h + lambda*hg^2", "x^2"];
        let (sys, st) = system(&f, &["x", "h", "g"], Some(vec![1, 0, 0]), &rels, &env);
        prop_assert_eq!(st, CompletionStatus::Confluent);
        let poly = |terms: &[(u8, usize, u16)]| {
            let mut p = NcPoly::zero();
            for &(l, e, c) in terms {
                p.add_term(Word::letter(l as usize).pow(e), Fe(c), &f);
            }
            p
        };
        let (pa, pb) = (poly(&a), poly(&b));
        let nf = |p: &NcPoly| sys.normal_form(p);
        prop_assert_eq!(nf(&pa.add(&pb, &f)), nf(&pa).add(&nf(&pb), &f));
        prop_assert_eq!(nf(&nf(&pa)), nf(&pa));
        prop_assert_eq!(nf(&pa.mul(&pb, &f)), nf(&nf(&pa).mul(&nf(&pb), &f)));
        let (uw, vw) = (Word::from_letters(&u), Word::from_letters(&v));
        for r in sys.rules() {
            prop_assert!(nf(&r.as_poly(&f).sandwich(&uw, &vw)).is_zero());
        }
    }
}
