//! Acceptance gate: the full property suite at dims {2,4,8,16}, 200 trials
//! per property, fixed seed, plus the direct shift and mutation checks.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use nuclear_core::verifier::registry;
use nuclear_core::{run_suite, shift_report, SuiteConfig, VerificationReport};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_records(report: &VerificationReport, ids: &[&str]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ids {
        match report.record(id) {
            Some(r) => {
                pass &= r.passed() && r.trials_run > 0;
                let worst = r
                    .max_violation
                    .map_or("n/a".to_string(), |v| format!("{v:.2e}"));
                parts.push(format!(
                    "{id}: {} trials, {} failures, max violation {worst} (tol {:.0e})",
                    r.trials_run, r.failures, r.tolerance
                ));
            }
            None => {
                pass = false;
                parts.push(format!("{id}: missing from report"));
            }
        }
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn shift_criterion(report: &VerificationReport) -> Outcome {
    let mut out = from_records(report, &["shift"]);
    for n in [2, 8, 64, 256] {
        match shift_report(n) {
            Ok(r) => {
                let ok = r.abs_diag_sum <= 1e-12 && (r.trace_norm - (n - 1) as f64).abs() <= 1e-9;
                out.pass &= ok;
                out.detail.push_str(&format!(
                    "; n={n}: abs diag sum {:.1e}, trace norm {}",
                    r.abs_diag_sum, r.trace_norm
                ));
            }
            Err(e) => {
                out.pass = false;
                out.detail.push_str(&format!("; n={n}: {e}"));
            }
        }
    }
    out
}

fn mutation_criterion(base: &SuiteConfig) -> Outcome {
    let mutant = registry()
        .find(|p| p.mutant)
        .expect("registry carries a mutant");
    let config = SuiteConfig {
        dims: vec![2, 4],
        trials: 20,
        properties: vec!["norm_chain".into(), mutant.id.into()],
        ..base.clone()
    };
    match run_suite(&config) {
        Ok(report) => {
            let caught = report.record(mutant.id).is_some_and(|r| r.failures > 0);
            let clean = report.record("norm_chain").is_some_and(|r| r.passed());
            Outcome {
                pass: !report.pass && caught && clean,
                detail: format!(
                    "report pass={}, mutant {} caught={caught}, sibling clean={clean}",
                    report.pass, mutant.id
                ),
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn main() -> ExitCode {
    let config = SuiteConfig {
        dims: vec![2, 4, 8, 16],
        trials: 200,
        seed: 42,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let report = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => {
            println!("suite failed to run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let elapsed = start.elapsed();

    let criteria: Vec<(&str, Outcome)> = vec![
        ("norm chain", from_records(&report, &["norm_chain"])),
        (
            "ideal inequalities",
            from_records(&report, &["ideal_bounds"]),
        ),
        (
            "adjoint invariance",
            from_records(&report, &["adjoint_invariance"]),
        ),
        (
            "trace identities",
            from_records(&report, &["trace_identities"]),
        ),
        (
            "Hilbert-Schmidt factorization",
            from_records(&report, &["factorization"]),
        ),
        (
            "basis independence",
            from_records(&report, &["basis_independence"]),
        ),
        (
            "nuclear norm = trace norm",
            from_records(&report, &["nuclear_trace"]),
        ),
        (
            "k-map contraction",
            from_records(&report, &["kmap_contraction"]),
        ),
        (
            "crossnorm sandwich",
            from_records(&report, &["crossnorm_sandwich"]),
        ),
        (
            "composition and adjoint",
            from_records(&report, &["composition"]),
        ),
        ("finite-rank density", from_records(&report, &["density"])),
        ("shift illustration", shift_criterion(&report)),
        ("duality attainment", from_records(&report, &["duality"])),
        (
            "trace = eigenvalue sum",
            from_records(&report, &["lidskii"]),
        ),
        ("mutation self-check", mutation_criterion(&config)),
    ];

    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}  {name}: {}",
            i + 1,
            outcome.detail
        );
        failed += usize::from(!outcome.pass);
    }
    let others: Vec<&str> = report
        .properties
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.property_id.as_str())
        .collect();
    println!(
        "suite: {} properties, pass={}, {:.1}s{}",
        report.properties.len(),
        report.pass,
        elapsed.as_secs_f64(),
        if others.is_empty() {
            String::new()
        } else {
            format!(", failing: {}", others.join(", "))
        }
    );
    if failed == 0 && report.pass {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", criteria.len());
        ExitCode::FAILURE
    }
}
