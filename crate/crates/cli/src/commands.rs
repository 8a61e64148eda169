use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use nuclear_core::{
    abs_op, factor_hs, injective_norm, k_map, optimal_rep, polar, projective_norm, rep_cost,
    run_suite, schatten_norm, shift_report, svd, Matrix, NuclearRep, SuiteConfig, TensorElement,
};

use crate::error::CliError;
use crate::{Exponent, Kind, VerifyArgs};

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

/// Single-line form for matrix artifacts.
fn to_compact_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

/// Writes `text` to `path`, or stdout when no path is given. The text is
/// complete before anything is written, so errors never leave partial output.
fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn norms(input: &Path, exponents: &[Exponent], json: bool) -> Result<(), CliError> {
    let t: Matrix = read_json(input)?;
    let mut values = Vec::with_capacity(exponents.len());
    for e in exponents {
        values.push((e.label.clone(), schatten_norm(&t, e.value)?));
    }
    let text = if json {
        let map: serde_json::Map<String, serde_json::Value> =
            values.into_iter().map(|(k, v)| (k, v.into())).collect();
        to_json(&map)
    } else {
        values
            .iter()
            .map(|(k, v)| format!("p={k}\t{v}\n"))
            .collect()
    };
    emit(&text, None)
}

#[derive(Serialize)]
struct RepWithCost<'a> {
    #[serde(flatten)]
    rep: &'a NuclearRep,
    cost: f64,
}

pub fn decompose(input: &Path, kind: Kind, out: Option<&Path>) -> Result<(), CliError> {
    let t: Matrix = read_json(input)?;
    let text = match kind {
        Kind::Svd => to_compact_json(&svd(&t)?),
        Kind::Polar => to_compact_json(&polar(&t)?),
        Kind::Abs => to_compact_json(&abs_op(&t)?),
        Kind::NuclearRep => {
            let rep = optimal_rep(&t)?;
            to_compact_json(&RepWithCost {
                rep: &rep,
                cost: rep_cost(&rep),
            })
        }
        Kind::FactorHs => to_compact_json(&factor_hs(&t)?),
    };
    emit(&text, out)
}

pub fn tensor_norm(input: &Path, projective: bool, json: bool) -> Result<(), CliError> {
    let f: TensorElement = read_json(input)?;
    let (name, value) = if projective {
        ("projective_norm", projective_norm(&f)?)
    } else {
        ("injective_norm", injective_norm(&f)?)
    };
    let text = if json {
        to_json(&serde_json::json!({ name: value }))
    } else {
        format!("{value}\n")
    };
    emit(&text, None)
}

pub fn kmap(input: &Path) -> Result<(), CliError> {
    let f: TensorElement = read_json(input)?;
    emit(&to_compact_json(&k_map(&f)), None)
}

pub fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let config = SuiteConfig {
        dims: args.dims,
        trials: args.trials,
        seed: args.seed,
        tol_algebraic: args.tol,
        tol_stochastic: args.tol_stochastic,
        properties: args.properties,
    };
    let report = run_suite(&config)?;
    let json = report.to_json() + "\n";
    if let Some(path) = &args.csv {
        write_file(path, &report.to_csv())?;
    }
    emit(&json, args.report.as_deref())?;
    if report.pass {
        return Ok(());
    }
    let failing: Vec<&str> = report
        .properties
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.property_id.as_str())
        .collect();
    eprintln!("verification failed: {}", failing.join(", "));
    Err(CliError::Verification)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn shift(dim: usize) -> Result<(), CliError> {
    emit(&to_json(&shift_report(dim)?), None)
}
