use numsg::prime_saturated::{is_prime, CaseReport};
use numsg::*;

#[test]
fn constructions_have_the_advertised_shape() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        for c in p..p * 6 {
            if c % p == 1 {
                continue;
            }
            let s = construct(p, c).unwrap();
            assert_eq!(s.multiplicity(), p);
            assert_eq!(s.conductor(), c);
            assert_eq!(s.embedding_dimension() as u64, p);
            assert!(is_saturated(&s) && s.is_med() && s.is_arf());
            let system = minimal_sat_system(&s).unwrap();
            assert_eq!(system.gens.len(), 2, "{s}");
            assert_eq!(system.gens[0], p);
        }
    }
}

#[test]
fn residue_one_is_vacuous() {
    for p in [2u64, 3, 5, 7] {
        for c in (p..=40).filter(|c| c % p == 1) {
            assert!(enumerate_saturated(p, c).unwrap().is_empty(), "({p}, {c})");
            assert!(matches!(construct(p, c), Err(Error::ResidueOne { .. })));
        }
    }
}

#[test]
fn closed_form_boundary_is_unreachable() {
    for p in (3..60).filter(|&p| is_prime(p)) {
        for i in 2..p {
            assert_ne!(2 * i, p + 2);
        }
    }
}

#[test]
fn zero_residue_maximum_sits_on_a_multiple_of_p() {
    for p in [2u64, 3, 5, 7] {
        for h in 1..=4 {
            let s = construct(p, p * h).unwrap();
            let detail = semigroup_catenary_detail(&s).unwrap();
            assert!(
                detail.attained_at.iter().any(|x| x % p == 0),
                "({p}, {}) maximum at {:?}",
                p * h,
                detail.attained_at
            );
            assert_eq!(detail.value, 2 * h + 1);
        }
    }
}

#[test]
fn example_case_in_restricted_sweep() {
    let options = VerifyOptions {
        residues: Some(vec![3]),
        ..Default::default()
    };
    let report = verify_range_with(&[5], 6, &options).unwrap();
    assert_eq!(report.cases.len(), 6);
    let case = report.case(5, 33).unwrap();
    assert_eq!(case.closed_form, 14);
    assert_eq!(case.brute_force, Some(14));
    assert_eq!(case.unique_count, 1);
    assert!(case.pass);
    assert_eq!(case.min_gens, vec![5, 33, 34, 36, 37]);
}

#[test]
fn report_json_shape() {
    let report = verify_range(&[3, 2], 2).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    let first = &value["cases"][0];
    for key in [
        "p",
        "c",
        "i",
        "h",
        "min_gens",
        "closed_form",
        "brute_force",
        "unique_count",
        "pass",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    for key in ["total", "passed", "failed", "elapsed_ms"] {
        assert!(value["summary"].get(key).is_some(), "missing {key}");
    }
    let order: Vec<(u64, u64)> = report.cases.iter().map(|k| (k.p, k.c)).collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
    let back: Vec<CaseReport> = serde_json::from_value(value["cases"].clone()).unwrap();
    assert_eq!(back.len(), report.cases.len());
    assert_eq!(
        report.summary.total,
        report.summary.passed + report.summary.failed
    );
}

#[test]
fn p3_sweep_passes() {
    let report = verify_range(&[3], 4).unwrap();
    assert!(report.passed(), "{:?}", report.cases);
}
