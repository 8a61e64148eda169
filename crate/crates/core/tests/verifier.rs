use nuclear_core::verifier::{default_properties, registry};
use nuclear_core::{run_suite, Error, SuiteConfig, VerificationReport};

fn config(properties: &[&str], dims: &[usize], trials: usize) -> SuiteConfig {
    SuiteConfig {
        dims: dims.to_vec(),
        trials,
        properties: properties.iter().map(|s| s.to_string()).collect(),
        ..SuiteConfig::default()
    }
}

#[test]
fn single_trial_report() {
    let r = run_suite(&config(&["norm_chain"], &[2], 1)).unwrap();
    assert!(r.pass);
    assert_eq!(r.properties.len(), 1);
    assert_eq!(r.properties[0].trials_run, 1);
    assert_eq!(r.properties[0].failures, 0);
}

#[test]
fn scalars_pass_everything() {
    let r = run_suite(&config(&["all"], &[1], 5)).unwrap();
    assert!(r.pass, "{}", r.to_csv());
}

#[test]
fn reports_are_deterministic() {
    let cfg = config(&["all"], &[2, 3], 4);
    let a = run_suite(&cfg).unwrap().without_timing().to_json();
    let b = run_suite(&cfg).unwrap().without_timing().to_json();
    assert_eq!(a, b);
}

#[test]
fn draws_do_not_depend_on_other_properties() {
    let alone = run_suite(&config(&["duality"], &[3], 6)).unwrap();
    let mixed = run_suite(&config(&["norm_chain", "duality", "shift"], &[3], 6)).unwrap();
    let mut a = alone.record("duality").unwrap().clone();
    let mut b = mixed.record("duality").unwrap().clone();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
}

#[test]
fn report_round_trips_through_json() {
    let r = run_suite(&config(&["shift", "density"], &[2, 5], 3)).unwrap();
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let csv = r.to_csv();
    assert!(csv.starts_with("property_id,trials,failures,max_violation\n"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn unknown_property_is_rejected() {
    let err = run_suite(&config(&["bogus"], &[2], 1)).unwrap_err();
    assert!(matches!(err, Error::UnknownProperty(ref id) if id == "bogus"));
}

#[test]
fn invalid_configs_are_rejected() {
    assert!(run_suite(&config(&["all"], &[], 1)).is_err());
    assert!(run_suite(&config(&["all"], &[0], 1)).is_err());
    assert!(run_suite(&config(&["all"], &[2], 0)).is_err());
    let mut c = config(&["all"], &[2], 1);
    c.tol_algebraic = 0.0;
    assert!(run_suite(&c).is_err());
}

#[test]
fn mutant_is_caught_and_reported_with_replay_data() {
    let mutant = registry().find(|p| p.mutant).unwrap();
    let r = run_suite(&config(&[mutant.id], &[2, 4], 10)).unwrap();
    assert!(!r.pass);
    let rec = r.record(mutant.id).unwrap();
    assert!(rec.failures > 0);
    assert!(rec.max_violation.unwrap() > rec.tolerance);
    let sample = &rec.failure_samples[0];
    assert!(sample.matrix.is_some());
    assert!(!default_properties().any(|p| p.mutant));
}

/// Every invariant of the operator-ideal and tensor/nuclear layers has a
/// registry entry.
#[test]
fn registry_covers_invariants() {
    let required = [
        "norm_chain",
        "ideal_bounds",
        "adjoint_invariance",
        "triangle",
        "trace_identities",
        "hs_identities",
        "abs_polar",
        "factorization",
        "basis_independence",
        "duality",
        "lidskii",
        "density",
        "shift",
        "nuclear_trace",
        "nuclear_triangle",
        "kmap_contraction",
        "crossnorm_sandwich",
        "representation_invariance",
        "composition",
        "bilinear_isometry",
        "bilinear_vector_bound",
    ];
    for id in required {
        let p = registry()
            .find(|p| p.id == id)
            .unwrap_or_else(|| panic!("{id} missing"));
        assert!(!p.anchor.is_empty());
        assert!(!p.mutant);
    }
    let mut ids: Vec<&str> = registry().map(|p| p.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), registry().count());
}
