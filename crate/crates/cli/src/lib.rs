//! Command-line front end for the formal connection reduction engines.

pub mod job;
pub mod report;
pub mod run;

use parared_core::Error;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Engine(Error),
    #[error("io error: {0}")]
    Io(String),
    #[error("certificate does not replay to the claimed form")]
    Verify,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    /// 1 failed verification, 2 bad input, 3 budget or search limits, 4 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Engine(e) => match e {
                Error::BudgetExceeded(_) | Error::NoProgress(_) | Error::SearchExhausted(_) | Error::FieldExtensionNeeded(_) => 3,
                Error::InvalidInput(_)
                | Error::ZeroConnection
                | Error::NotIntegerWeight
                | Error::NotLogarithmic
                | Error::NotParahoric
                | Error::NotNilpotentLeading
                | Error::NonCommutingList
                | Error::OrderTooLow(_)
                | Error::WindowTooLarge(_)
                | Error::DimensionMismatch(_)
                | Error::InvalidWord(_) => 2,
                _ => 4,
            },
        }
    }

    pub fn kind(&self) -> String {
        match self {
            CliError::Parse(_) => "ParseError".into(),
            CliError::Io(_) => "IoError".into(),
            CliError::Verify => "VerifyFailed".into(),
            CliError::Engine(e) => {
                let dbg = format!("{e:?}");
                dbg.split(['(', ' ']).next().unwrap_or("Engine").to_string()
            }
        }
    }

    /// The JSON error record printed on stdout.
    pub fn record(&self) -> String {
        let v = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        let mut s = serde_json::to_string_pretty(&v).expect("error record serializes");
        s.push('\n');
        s
    }
}
