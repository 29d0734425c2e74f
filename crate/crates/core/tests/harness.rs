use hopfbench::catalog::{family, Scope};
use hopfbench::gf::make_field;
use hopfbench::harness::{
    fault_campaign, inject_fault, nichols_targets, select_points, summarize, verify_family,
    verify_identity_suite, verify_iso_criteria, verify_scope, Fault, HarnessError, Outcome,
    Sampling, Suite, DEFAULT_SAMPLE, DEFAULT_SEED,
};

#[test]
fn sweep_policy() {
    let gf2 = make_field(2, 1).unwrap();
    let gf4 = make_field(2, 2).unwrap();
    let t5 = family("T4.2-5").unwrap();
    assert_eq!(Sampling::policy(t5, &gf4), Sampling::Full);
    let l35 = family("L3.5").unwrap();
    assert_eq!(Sampling::policy(l35, &gf2), Sampling::Full);
    assert_eq!(
        Sampling::policy(l35, &gf4),
        Sampling::Sample {
            n: DEFAULT_SAMPLE,
            seed: DEFAULT_SEED
        }
    );
}

#[test]
fn sampling_is_seeded() {
    let gf4 = make_field(2, 2).unwrap();
    let l35 = family("L3.5").unwrap();
    let s = Sampling::Sample { n: 20, seed: 7 };
    let a = select_points(l35, &gf4, s).unwrap();
    assert_eq!(a, select_points(l35, &gf4, s).unwrap());
    assert_eq!(a.len(), 20);
    assert!(a.windows(2).all(|w| w[0] < w[1]));
    assert!(a.iter().all(|&i| i < 512));
    let b = select_points(l35, &gf4, Sampling::Sample { n: 20, seed: 8 }).unwrap();
    assert_ne!(a, b);
    let big = make_field(3, 2).unwrap();
    assert!(matches!(
        select_points(l35, &big, Sampling::Full),
        Err(HarnessError::SweepTooLarge { .. })
    ));
}

#[test]
fn family_reports_are_ordered_and_pass() {
    let gf4 = make_field(2, 2).unwrap();
    let reps = verify_family(family("T4.2-9").unwrap(), &gf4, Sampling::Full).unwrap();
    assert_eq!(reps.len(), 4);
    assert!(reps.iter().all(|r| r.passed() && r.outcome == Outcome::Ok { dim: 16 }));
    assert_eq!(reps.iter().map(|r| r.index).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    assert_eq!(reps[2].record(), "PASS T4.2-9 GF(2^2) 16 [lambda=2] ok(dim=16,axioms=6/6)");
    let rows = summarize(&reps);
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].points, rows[0].ok, rows[0].passed), (4, 4, 4));
}

#[test]
fn characteristic_mismatch_is_an_error() {
    let gf3 = make_field(3, 1).unwrap();
    assert!(verify_family(family("T4.2-1").unwrap(), &gf3, Sampling::Full).is_err());
    // Scope sweeps skip families the field does not support.
    let reps = verify_scope(Scope::T42, &gf3, None).unwrap();
    assert!(reps.is_empty());
}

#[test]
fn collapsed_point_is_reported() {
    let gf2 = make_field(2, 1).unwrap();
    let reps = verify_family(family("T4.2-48").unwrap(), &gf2, Sampling::Full).unwrap();
    assert_eq!(reps.len(), 1);
    assert!(!reps[0].passed());
    assert_eq!(reps[0].dim, Some(8));
    assert!(matches!(&reps[0].outcome, Outcome::Collapse(r) if r.starts_with("dimension-drop")));
}

#[test]
fn ambiguity_condition_decides_pass() {
    let gf2 = make_field(2, 1).unwrap();
    let reps = verify_family(family("L3.10-mu0").unwrap(), &gf2, Sampling::Full).unwrap();
    assert!(reps.iter().any(|r| r.condition == Some(false)));
    assert!(reps.iter().any(|r| r.condition == Some(true)));
    for r in &reps {
        assert!(r.passed(), "{}", r.record());
        assert_eq!(r.condition == Some(true), r.dim == Some(16), "{}", r.record());
    }
}

#[test]
fn faults_collapse() {
    let gf2 = make_field(2, 1).unwrap();
    let fam = family("T4.2-5").unwrap();
    let pres = fam.instantiate(&fam.param_point(&gf2, 0), &gf2).unwrap();
    let (_, fault) = inject_fault(&pres).unwrap();
    assert!(matches!(fault, Fault::ShiftedRelation { .. }));
    let reps = fault_campaign(Scope::T37, &gf2);
    assert_eq!(reps.len(), 35);
    assert!(reps.iter().all(|r| r.passed()), "{:?}", reps.iter().find(|r| !r.passed()));
}

#[test]
fn iso_comparison_on_small_family() {
    let gf2 = make_field(2, 1).unwrap();
    let rep = verify_iso_criteria(family("T3.7-1").unwrap(), &gf2).unwrap();
    assert_eq!(rep.pairs.len(), 4);
    assert!(rep.agreement() && rep.oracle_symmetric());
    assert_eq!(rep.oracle_classes(), vec![vec![0], vec![1]]);
    assert!(verify_iso_criteria(family("T4.2-1").unwrap(), &gf2).is_err());
}

#[test]
fn identity_suites_are_reproducible() {
    let gf2 = make_field(2, 1).unwrap();
    for suite in [Suite::Jacobson, Suite::Lemma210, Suite::Lemma211] {
        let a = verify_identity_suite(suite, &gf2, 10, 3);
        let b = verify_identity_suite(suite, &gf2, 10, 3);
        assert!(a.passed(), "{}: {:?}", a.record(), a.failures);
        assert_eq!(a.algebras, b.algebras);
    }
    assert_eq!(Suite::parse("lemma210"), Some(Suite::Lemma210));
    assert_eq!(Suite::parse("nope"), None);
}

#[test]
fn nichols_targets_cover_both_characteristics() {
    let t = nichols_targets();
    assert_eq!(t.iter().filter(|t| t.p == 2).count(), 5);
    assert_eq!(t.iter().filter(|t| t.p == 3).count(), 1);
}
