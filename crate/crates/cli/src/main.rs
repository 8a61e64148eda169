mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(
    name = "nuclear",
    version,
    about = "Trace-class and nuclear operator calculus on dense complex matrices"
)]
struct Cli {
    /// Worker threads for the verification suite (default: all cores).
    #[arg(long, global = true, env = "NUCLEAR_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schatten norms of a matrix.
    Norms {
        input: PathBuf,
        /// Exponents: positive numbers or `inf`.
        #[arg(long = "p", value_delimiter = ',', default_value = "1,2,inf", value_parser = parse_p)]
        p: Vec<Exponent>,
        #[arg(long)]
        json: bool,
    },
    /// Factor a matrix and write the factors as JSON.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Norms and the operator of a tensor element.
    Tensor {
        #[command(subcommand)]
        op: TensorOp,
    },
    /// Run the property suite.
    Verify(VerifyArgs),
    /// Finite-dimensional counterexample reports.
    Counterexample {
        #[command(subcommand)]
        kind: Counterexample,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Svd,
    Polar,
    Abs,
    NuclearRep,
    FactorHs,
}

#[derive(Subcommand)]
enum TensorOp {
    /// Projective norm.
    Pnorm {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Injective norm.
    Inorm {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The operator x ↦ Σ f_k(x) y_k of an element of X*⊗Y, as a matrix.
    Kmap { input: PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_value = "2,4,8")]
    dims: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance for algebraic identities.
    #[arg(long, env = "NUCLEAR_TOL", default_value_t = 1e-9)]
    tol: f64,
    /// Tolerance for sampled (stochastic) checks.
    #[arg(long, default_value_t = 1e-6)]
    tol_stochastic: f64,
    /// Property ids, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    properties: Vec<String>,
    /// JSON report file (default: stdout).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also write a CSV summary here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Counterexample {
    /// The truncated unilateral shift.
    Shift {
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Exponent {
    label: String,
    value: f64,
}

fn parse_p(s: &str) -> Result<Exponent, String> {
    let value = match s {
        "inf" | "Inf" | "infinity" => f64::INFINITY,
        _ => s
            .parse::<f64>()
            .map_err(|_| format!("not a number or `inf`: {s}"))?,
    };
    if value.is_nan() || value <= 0.0 {
        return Err(format!("exponent must be positive: {s}"));
    }
    Ok(Exponent {
        label: s.to_string(),
        value,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("threads: {e}")))?;
    }
    match cli.command {
        Command::Norms { input, p, json } => commands::norms(&input, &p, json),
        Command::Decompose { input, kind, out } => {
            commands::decompose(&input, kind, out.as_deref())
        }
        Command::Tensor { op } => match op {
            TensorOp::Pnorm { input, json } => commands::tensor_norm(&input, true, json),
            TensorOp::Inorm { input, json } => commands::tensor_norm(&input, false, json),
            TensorOp::Kmap { input } => commands::kmap(&input),
        },
        Command::Verify(args) => commands::verify(args),
        Command::Counterexample {
            kind: Counterexample::Shift { dim },
        } => commands::shift(dim),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification) => CliError::Verification.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
