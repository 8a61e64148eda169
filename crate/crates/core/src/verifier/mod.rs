//! Seeded verification suite over random-matrix ensembles.

mod properties;
mod reports;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ensemble::trial_rng;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use properties::{default_properties, find, registry, Property, ToleranceClass, Trial};
pub use reports::{density_report, shift_report, DensityStep, ShiftReport};

/// Keyword selecting every non-mutant property.
pub const ALL: &str = "all";

/// Cap on failure samples kept per property.
const MAX_SAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub tol_algebraic: f64,
    pub tol_stochastic: f64,
    pub properties: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            dims: vec![2, 4, 8],
            trials: 200,
            seed: 42,
            tol_algebraic: 1e-9,
            tol_stochastic: 1e-6,
            properties: vec![ALL.to_string()],
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(Error::InvalidConfig(
                "dims must be a nonempty list of positive integers".into(),
            ));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        for (name, t) in [
            ("tol_algebraic", self.tol_algebraic),
            ("tol_stochastic", self.tol_stochastic),
        ] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {t}"
                )));
            }
        }
        if self.properties.is_empty() {
            return Err(Error::InvalidConfig("no properties selected".into()));
        }
        Ok(())
    }

    /// Resolves property ids in the order given, expanding `"all"`.
    pub fn selected(&self) -> Result<Vec<&'static Property>> {
        let mut out: Vec<&'static Property> = Vec::new();
        for id in &self.properties {
            let chosen: Vec<&'static Property> = if id == ALL {
                default_properties().collect()
            } else {
                vec![find(id).ok_or_else(|| Error::UnknownProperty(id.clone()))?]
            };
            for p in chosen {
                if !out.iter().any(|q| q.id == p.id) {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    fn tolerance(&self, p: &Property) -> f64 {
        match p.class {
            ToleranceClass::Algebraic => self.tol_algebraic,
            ToleranceClass::Stochastic => self.tol_stochastic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureSample {
    pub dim: usize,
    pub trial: usize,
    pub check: String,
    pub violation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Offending input, for replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub property_id: String,
    pub anchor: String,
    pub tolerance: f64,
    pub trials_run: usize,
    /// Number of trials with at least one check above tolerance (or an error).
    pub failures: usize,
    /// Largest scaled slack over all checks; positive values are violations
    /// of the bare inequality, failures are those above `tolerance`. `None`
    /// when no trial ran.
    pub max_violation: Option<f64>,
    pub worst_check: Option<String>,
    pub elapsed_ms: u64,
    pub failure_samples: Vec<FailureSample>,
}

impl PropertyRecord {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub properties: Vec<PropertyRecord>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `property_id,trials,failures,max_violation` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("property_id,trials,failures,max_violation\n");
        for r in &self.properties {
            let mv = r
                .max_violation
                .map(|v| format!("{v:e}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.property_id, r.trials_run, r.failures, mv
            ));
        }
        out
    }

    /// Copy with timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        for p in &mut r.properties {
            p.elapsed_ms = 0;
        }
        r
    }

    pub fn record(&self, id: &str) -> Option<&PropertyRecord> {
        self.properties.iter().find(|r| r.property_id == id)
    }
}

struct TrialOutcome {
    dim: usize,
    trial: usize,
    worst: Option<(String, f64)>,
    failed_check: Option<(String, f64)>,
    error: Option<String>,
    witness: Option<Matrix>,
}

fn run_trial(
    config: &SuiteConfig,
    p: &Property,
    dim: usize,
    trial: usize,
    tol: f64,
) -> TrialOutcome {
    let mut t = Trial::new(trial_rng(config.seed, p.id, dim, trial), dim, trial);
    let result = (p.run)(&mut t);
    let worst = t
        .checks
        .iter()
        .max_by(|a, b| a.violation.total_cmp(&b.violation))
        .map(|c| (c.label.to_string(), c.violation));
    let failed_check = t
        .checks
        .iter()
        .find(|c| c.violation > tol)
        .map(|c| (c.label.to_string(), c.violation));
    TrialOutcome {
        dim,
        trial,
        worst,
        failed_check,
        error: result.err().map(|e| e.to_string()),
        witness: t.witness,
    }
}

fn run_property(config: &SuiteConfig, p: &Property) -> PropertyRecord {
    let start = Instant::now();
    let tol = config.tolerance(p);
    let jobs: Vec<(usize, usize)> = config
        .dims
        .iter()
        .filter(|&&d| p.applies_to(d))
        .flat_map(|&d| (0..config.trials).map(move |i| (d, i)))
        .collect();
    // parallel evaluation, aggregation in job order
    let outcomes: Vec<TrialOutcome> = jobs
        .par_iter()
        .map(|&(d, i)| run_trial(config, p, d, i, tol))
        .collect();

    let mut record = PropertyRecord {
        property_id: p.id.to_string(),
        anchor: p.anchor.to_string(),
        tolerance: tol,
        trials_run: outcomes.len(),
        failures: 0,
        max_violation: None,
        worst_check: None,
        elapsed_ms: 0,
        failure_samples: Vec::new(),
    };
    for o in outcomes {
        if let Some((label, v)) = &o.worst {
            if record.max_violation.is_none_or(|m| *v > m) {
                record.max_violation = Some(*v);
                record.worst_check = Some(label.clone());
            }
        }
        let failure = match (&o.error, &o.failed_check) {
            (Some(e), _) => Some(("error".to_string(), f64::MAX, Some(e.clone()))),
            (None, Some((label, v))) => Some((label.clone(), *v, None)),
            (None, None) => None,
        };
        if let Some((check, violation, error)) = failure {
            record.failures += 1;
            if error.is_some() {
                record.max_violation = Some(f64::MAX);
                record.worst_check = Some(check.clone());
            }
            if record.failure_samples.len() < MAX_SAMPLES {
                record.failure_samples.push(FailureSample {
                    dim: o.dim,
                    trial: o.trial,
                    check,
                    violation,
                    error,
                    matrix: o.witness,
                });
            }
        }
    }
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    record
}

/// Runs every selected property on `trials` draws per applicable dimension.
///
/// Numerical errors inside a trial are recorded as failures. The report is
/// a deterministic function of the configuration apart from `elapsed_ms`.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    let selected = config.selected()?;
    let properties: Vec<PropertyRecord> =
        selected.iter().map(|p| run_property(config, p)).collect();
    let pass = properties.iter().all(PropertyRecord::passed);
    Ok(VerificationReport {
        config: config.clone(),
        properties,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(props: &[&str], dims: &[usize], trials: usize) -> SuiteConfig {
        SuiteConfig {
            dims: dims.to_vec(),
            trials,
            properties: props.iter().map(|s| s.to_string()).collect(),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn single_trial_norm_chain() {
        let r = run_suite(&config(&["norm_chain"], &[2], 1)).unwrap();
        assert_eq!(r.properties.len(), 1);
        let rec = &r.properties[0];
        assert_eq!(rec.trials_run, 1);
        assert_eq!(rec.failures, 0);
        assert!(r.pass);
    }

    #[test]
    fn scalars_pass_everything() {
        let r = run_suite(&config(&[ALL], &[1], 4)).unwrap();
        for rec in &r.properties {
            assert_eq!(rec.failures, 0, "{rec:?}");
        }
        assert!(r.pass);
        assert_eq!(r.record("shift").unwrap().trials_run, 0);
    }

    #[test]
    fn unknown_property_is_rejected() {
        let err = run_suite(&config(&["bogus"], &[2], 1)).unwrap_err();
        assert!(matches!(err, Error::UnknownProperty(ref id) if id == "bogus"));
    }

    #[test]
    fn invalid_configs() {
        assert!(run_suite(&config(&[ALL], &[], 1)).is_err());
        assert!(run_suite(&config(&[ALL], &[2], 0)).is_err());
        let mut c = config(&[ALL], &[2], 1);
        c.tol_algebraic = 0.0;
        assert!(matches!(run_suite(&c), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn mutant_fails_and_carries_witness() {
        let r = run_suite(&config(&["mutant_trace_le_operator"], &[4], 8)).unwrap();
        let rec = &r.properties[0];
        assert_eq!(rec.failures, 8);
        assert!(!r.pass);
        let sample = &rec.failure_samples[0];
        assert!(sample.matrix.is_some());
        assert!(sample.violation > rec.tolerance);
    }

    #[test]
    fn all_excludes_mutants() {
        let c = config(&[ALL], &[2], 1);
        assert!(c.selected().unwrap().iter().all(|p| !p.mutant));
        let c = config(&["norm_chain", ALL, "norm_chain"], &[2], 1);
        let ids: Vec<_> = c.selected().unwrap().iter().map(|p| p.id).collect();
        assert_eq!(ids[0], "norm_chain");
        assert_eq!(ids.iter().filter(|&&i| i == "norm_chain").count(), 1);
    }

    #[test]
    fn csv_has_one_row_per_property() {
        let r = run_suite(&config(&["norm_chain", "triangle"], &[3], 2)).unwrap();
        let csv = r.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "property_id,trials,failures,max_violation");
        assert!(lines[1].starts_with("norm_chain,2,0,"));
        assert_eq!(lines.len(), 3);
    }
}
