use std::collections::HashSet;

use praxkit_claims::gen::{self, Constraint};
use praxkit_claims::runner::{evaluate_relation, strip_runtime};
use praxkit_claims::{registry, run_suite, Expected, Found, RunConfig, Status};
use praxkit_core::RelationJson;

fn small() -> RunConfig {
    RunConfig { n_max: 3, samples: 20, sample_n: 5, seed: 42, suite: String::new() }
}

#[test]
fn pinned_prax_sample() {
    let text = include_str!("fixtures/prax_n7_seed42.json");
    let pinned: RelationJson = serde_json::from_str(text).unwrap();
    let r = gen::random_relation(7, Constraint::Prax, 42).unwrap();
    assert_eq!(r.to_json(), pinned);
    assert!(r.is_prax());
    assert_eq!(gen::sample_relation(7, Constraint::Prax, 42, 0).unwrap(), r);
}

#[test]
fn enumeration_counts() {
    assert_eq!(gen::enumerate_relations(1, Constraint::Prax).unwrap().len(), 1);
    assert_eq!(gen::enumerate_relations(2, Constraint::AllReflexive).unwrap().len(), 4);
    assert_eq!(gen::enumerate_relations(2, Constraint::Prax).unwrap().len(), 4);
    let eq3 = gen::enumerate_relations(3, Constraint::Equivalence).unwrap();
    assert_eq!(eq3.len(), 5);
}

#[test]
fn ids_are_unique_and_refs_present() {
    let claims = registry();
    let mut seen = HashSet::new();
    for c in &claims {
        assert!(seen.insert(c.id), "duplicate id {}", c.id);
        assert!(!c.statement.trim().is_empty(), "{} has no reference", c.id);
    }
}

#[test]
fn counterexamples_replay() {
    let claims = registry();
    let report = run_suite(&claims, &small()).unwrap();
    let mut replayed = 0;
    for rep in &report.claims {
        let Some(rel) = rep.counterexample.as_ref().and_then(|cx| cx.relation.as_ref()) else { continue };
        let claim = claims.iter().find(|c| c.id == rep.id).unwrap();
        let r = rel.to_relation().unwrap();
        assert!(
            matches!(evaluate_relation(claim, &r, rep.seed), Found::Hit(_)),
            "{} counterexample does not replay",
            rep.id
        );
        replayed += 1;
    }
    assert!(replayed > 10);
}

#[test]
fn errata_claims_produce_witnesses() {
    let cfg = RunConfig { suite: "GRN-OTO,DEP-VAG-1".into(), ..small() };
    let report = run_suite(&registry(), &cfg).unwrap();
    assert_eq!(report.claims.len(), 2);
    for c in &report.claims {
        assert_eq!(c.expected, Expected::ExpectedFail);
        assert_eq!(c.status, Status::Fail);
        assert!(c.counterexample.is_some());
    }
    assert!(report.ok);
}

#[test]
fn reports_are_deterministic() {
    let cfg = RunConfig { suite: "APP-*,NMR-*,PRB-*".into(), ..small() };
    let mut a = run_suite(&registry(), &cfg).unwrap();
    let mut b = run_suite(&registry(), &cfg).unwrap();
    strip_runtime(&mut a);
    strip_runtime(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn bad_glob_is_an_error() {
    let cfg = RunConfig { suite: "[".into(), ..small() };
    assert!(run_suite(&registry(), &cfg).is_err());
}
