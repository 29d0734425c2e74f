use hopfbench::gf::{make_field, Fe, Matrix};
use hopfbench::nichols::{
    nichols_dims, permutations, quantum_symmetrizer, reduced_word, reduced_word_right,
    symmetrizer_by_permutations, truncated_hilbert_series, BraidedSpace, NicholsError,
    DEFAULT_BUDGET,
};
use proptest::prelude::*;

fn total(spec: &str, p: u32, k: u32, n_max: usize) -> (Vec<usize>, usize, bool) {
    let f = make_field(p, k).unwrap();
    let v = BraidedSpace::parse(spec, &f).unwrap();
    let d = nichols_dims(&v, n_max, DEFAULT_BUDGET).unwrap();
    (d.graded, d.total, d.closed)
}

#[test]
fn one_dimensional_trivial_braiding_char2() {
    assert_eq!(total("trivial:1", 2, 1, 4), (vec![1, 1, 0, 0, 0], 2, true));
}

#[test]
fn trivial_braidings_give_truncated_polynomial_rings() {
    assert_eq!(total("trivial:2", 2, 1, 6).1, 4);
    assert_eq!(total("trivial:3", 2, 1, 6).1, 8);
    for (p, m) in [(2usize, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        let (graded, _, closed) = total(&format!("trivial:{m}"), p as u32, 1, m * (p - 1) + 1);
        assert!(closed);
        let mut expect = truncated_hilbert_series(p, m);
        expect.push(0);
        assert_eq!(graded, expect, "p={p} m={m}");
    }
}

#[test]
fn jordan_plane_char2_has_dimension_16() {
    let (graded, total, closed) = total("jordan:1,2", 2, 1, 10);
    assert!(closed);
    assert_eq!(total, 16);
    assert_eq!(graded[1], 2);
}

#[test]
fn jordan_block_over_c3_char3_has_dimension_9() {
    assert_eq!(total("yd-cyclic:1,2,3", 3, 1, 8).1, 9);
    assert_eq!(total("yd-cyclic:2,2,3", 3, 1, 8).1, 9);
}

#[test]
fn m02_over_c4_char2_is_trivially_braided() {
    assert_eq!(total("yd-cyclic:2,2,4", 2, 1, 6).1, 4);
}

#[test]
fn jordan_example_formula() {
    let f = make_field(2, 1).unwrap();
    let v = BraidedSpace::jordan(Fe::ONE, 2, &f).unwrap();
    // x1 = e0, x2 = e1; index i*2+j.
    assert_eq!(v.c.col(2), vec![Fe(0), Fe(1), Fe(0), Fe(0)]);
    assert_eq!(v.c.col(3), vec![Fe(0), Fe(1), Fe(0), Fe(1)]);
}

#[test]
fn yd_cyclic_braiding_block() {
    // M_{1,2} over C4: c(x⊗y) = (y + x)⊗x, c(y⊗x) = x⊗y, c(y⊗y) = (y + x)⊗y.
    let f = make_field(2, 1).unwrap();
    let v = BraidedSpace::parse("yd-cyclic:1,2,4", &f).unwrap();
    let e = |i: usize| {
        let mut c = vec![Fe::ZERO; 4];
        c[i] = Fe::ONE;
        c
    };
    let add = |a: Vec<Fe>, b: Vec<Fe>| a.iter().zip(&b).map(|(x, y)| f.add(*x, *y)).collect::<Vec<_>>();
    let (xx, xy, yx, yy) = (0, 1, 2, 3);
    assert_eq!(v.c.col(xx), e(xx));
    assert_eq!(v.c.col(xy), add(e(yx), e(xx)));
    assert_eq!(v.c.col(yx), e(xy));
    assert_eq!(v.c.col(yy), add(e(yy), e(xy)));
}

#[test]
fn non_braiding_is_rejected() {
    let f = make_field(2, 1).unwrap();
    // Transvection e_{01} -> e_{01} + e_{00} mixing blocks.
    let mut c = Matrix::identity(4);
    c.set(0, 1, Fe::ONE);
    let v = BraidedSpace::unchecked(2, f.clone(), c.clone());
    assert!(!v.check_braid_equation());
    assert_eq!(
        BraidedSpace::new(2, f, c).unwrap_err(),
        NicholsError::BraidEquation
    );
}

#[test]
fn symmetrizer_small_degrees() {
    let f = make_field(2, 1).unwrap();
    let v = BraidedSpace::parse("trivial:1", &f).unwrap();
    let o1 = quantum_symmetrizer(&v, 1, DEFAULT_BUDGET).unwrap();
    assert_eq!(o1.to_matrix(), Matrix::identity(1));
    let o2 = quantum_symmetrizer(&v, 2, DEFAULT_BUDGET).unwrap();
    assert!(o2.to_matrix().is_zero());
    let w = BraidedSpace::parse("jordan:1,2", &f).unwrap();
    let o2 = quantum_symmetrizer(&w, 2, DEFAULT_BUDGET).unwrap().to_matrix();
    let mut expect = w.c.clone();
    for i in 0..4 {
        expect.set(i, i, f.add(expect.get(i, i), Fe::ONE));
    }
    assert_eq!(o2, expect);
}

#[test]
fn budget_is_enforced() {
    let f = make_field(2, 1).unwrap();
    let v = BraidedSpace::parse("trivial:3", &f).unwrap();
    assert!(matches!(
        quantum_symmetrizer(&v, 9, DEFAULT_BUDGET),
        Err(NicholsError::Budget { .. })
    ));
}

#[test]
fn factorized_symmetrizer_matches_permutation_sum() {
    for (spec, p, k) in [
        ("jordan:1,2", 2, 1),
        ("yd-cyclic:1,2,3", 3, 1),
        ("bashev:1,0,1", 2, 1),
        ("diagonal:1,2;3,2", 2, 2),
        ("yd-cyclic:1,2,4+yd-cyclic:2,1,4", 2, 1),
    ] {
        let f = make_field(p, k).unwrap();
        let v = BraidedSpace::parse(spec, &f).unwrap();
        let nmax = if v.m == 3 { 4 } else { 5 };
        for n in 1..=nmax {
            let a = quantum_symmetrizer(&v, n, DEFAULT_BUDGET).unwrap();
            let b = symmetrizer_by_permutations(&v, n);
            assert_eq!(a, b, "{spec} n={n}");
        }
    }
}

#[test]
fn braid_relations_hold_for_lifts() {
    let f = make_field(3, 1).unwrap();
    let v = BraidedSpace::parse("yd-cyclic:1,2,3", &f).unwrap();
    let n = 4;
    for e in 0..v.m.pow(n as u32) {
        let u = vec![(e as u32, Fe::ONE)];
        for i in 0..n - 2 {
            assert_eq!(v.apply_word(&u, n, &[i, i + 1, i]), v.apply_word(&u, n, &[i + 1, i, i + 1]));
        }
        assert_eq!(v.apply_word(&u, n, &[0, 2]), v.apply_word(&u, n, &[2, 0]));
    }
}

#[test]
fn permutation_count() {
    assert_eq!(permutations(5).len(), 120);
    for p in permutations(4) {
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        assert_eq!(reduced_word(&p).len(), inversions);
        assert_eq!(reduced_word_right(&p).len(), inversions);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn matsumoto_lift_is_independent_of_reduced_word(
        perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(),
        spec in prop::sample::select(vec!["jordan:1,2", "bashev:1,1,1", "yd-cyclic:1,2,4"]),
    ) {
        let f = make_field(2, 1).unwrap();
        let v = BraidedSpace::parse(spec, &f).unwrap();
        let n = perm.len();
        let w1 = reduced_word(&perm);
        let w2 = reduced_word_right(&perm);
        for e in 0..v.m.pow(n as u32) {
            let u = vec![(e as u32, Fe::ONE)];
            prop_assert_eq!(v.apply_word(&u, n, &w1), v.apply_word(&u, n, &w2));
        }
    }
}

#[test]
fn mixed_module_over_c2_exceeds_eight() {
    let f = make_field(2, 1).unwrap();
    let v = BraidedSpace::parse("yd-cyclic:1,2,2+yd-cyclic:0,1,2", &f).unwrap();
    let d = nichols_dims(&v, 8, DEFAULT_BUDGET).unwrap();
    eprintln!("{:?}", d);
    assert!(d.total > 8);
}
