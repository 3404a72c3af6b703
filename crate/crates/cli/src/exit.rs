use std::fmt;

use serde_json::json;
use svp_core::Error;

/// Exit codes: 2 bad input, 3 solver failure, 4 dimension guard.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Solver(String),
    Guard(String),
    Io(anyhow::Error),
}

impl CliError {
    pub fn from_core(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Shape(_) | Error::RankDeficient { .. } => CliError::Input(e.to_string()),
            Error::DimensionGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Solver(other.to_string()),
        }
    }

    pub fn context(self, what: &str) -> Self {
        match self {
            CliError::Input(m) => CliError::Input(format!("{what}: {m}")),
            CliError::Solver(m) => CliError::Solver(format!("{what}: {m}")),
            CliError::Guard(m) => CliError::Guard(format!("{what}: {m}")),
            CliError::Io(e) => CliError::Io(e.context(what.to_string())),
        }
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Guard(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Solver(_) => "solver",
            CliError::Guard(_) => "guard",
            CliError::Io(_) => "io",
        }
    }

    pub fn to_json(&self) -> String {
        json!({ "schema": 1, "status": "error", "kind": self.kind(), "message": self.to_string() }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Solver(m) | CliError::Guard(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e:#}"),
        }
    }
}
