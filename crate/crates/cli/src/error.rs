use std::fmt;
use std::path::Path;
use std::process::ExitCode;

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed input.
    Usage(String),
    /// A decomposition or check could not be computed.
    Numerical(String),
    /// The verification suite ran and some property failed.
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Verification => 4,
        })
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Usage(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) => f.write_str(m),
            CliError::Verification => f.write_str("verification failed"),
        }
    }
}

impl From<nuclear_core::Error> for CliError {
    fn from(e: nuclear_core::Error) -> Self {
        use nuclear_core::Error::*;
        match e {
            NotHermitian { .. }
            | NotPsd { .. }
            | NotUnitary { .. }
            | NoConvergence { .. }
            | SingularMix => CliError::Numerical(e.to_string()),
            UnknownProperty(ref id) => {
                let known: Vec<&str> = nuclear_core::verifier::registry().map(|p| p.id).collect();
                CliError::Usage(format!(
                    "unknown property {id:?}; known properties: {}",
                    known.join(", ")
                ))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}
