//! Exit codes and error classification.

use latpoly::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Internal = 1,
    Usage = 2,
    Parse = 3,
    Empty = 4,
    Unbounded = 5,
    Budget = 6,
    Unconverged = 7,
    InvalidInput = 8,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::EmptyFeasibleSet => ExitCode::Empty,
            Error::Unbounded => ExitCode::Unbounded,
            Error::BudgetExceeded { .. } => ExitCode::Budget,
            Error::Internal(_) | Error::DegenerateDirection | Error::DependentRays | Error::NotAVertex => {
                ExitCode::Internal
            }
            _ => ExitCode::InvalidInput,
        };
        CliError::new(code, e.to_string())
    }
}
