//! Job documents: the input schema.

use serde::{Deserialize, Serialize};

use parared_core::lie::MatSeries;
use parared_core::parahoric::{Connection, Weight};
use parared_core::series::{parse_rat, LaurentSeries, Rat};

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Connection,
    Higgs,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_ramification: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<i64>,
}

impl JobOptions {
    fn is_empty(&self) -> bool {
        *self == JobOptions::default()
    }
}

/// One job: a connection (dz-coefficient), its truncation and a weight.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub n: usize,
    pub truncation: i64,
    pub weight: Vec<String>,
    #[serde(default)]
    pub mode: Mode,
    /// `connection[a][b]` lists `(exponent, coefficient)` pairs.
    pub connection: Vec<Vec<Vec<(i64, String)>>>,
    #[serde(default, skip_serializing_if = "JobOptions::is_empty")]
    pub options: JobOptions,
}

pub fn parse_job(text: &str) -> Result<JobSpec, CliError> {
    let job: JobSpec = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    job.validate()?;
    Ok(job)
}

/// Canonical text of a job; `parse_job` reads it back unchanged.
pub fn print_job(job: &JobSpec) -> String {
    let mut s = serde_json::to_string_pretty(job).expect("job serializes");
    s.push('\n');
    s
}

fn field_rat(field: &str, s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Parse(format!("{field}: {e}")))
}

impl JobSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n == 0 {
            return Err(CliError::Parse("n: must be positive".into()));
        }
        if self.truncation < 4 {
            return Err(CliError::Parse(format!("truncation: {} is below the minimum 4", self.truncation)));
        }
        if self.weight.len() != self.n {
            return Err(CliError::Parse(format!("weight: expected {} entries, found {}", self.n, self.weight.len())));
        }
        for (a, w) in self.weight.iter().enumerate() {
            field_rat(&format!("weight[{a}]"), w)?;
        }
        if self.connection.len() != self.n || self.connection.iter().any(|r| r.len() != self.n) {
            return Err(CliError::Parse(format!("connection: expected a {0}x{0} table", self.n)));
        }
        for (a, row) in self.connection.iter().enumerate() {
            for (b, terms) in row.iter().enumerate() {
                for (k, v) in terms {
                    field_rat(&format!("connection[{a}][{b}]"), v)?;
                    if *k >= self.truncation {
                        return Err(CliError::Parse(format!(
                            "connection[{a}][{b}]: exponent {k} is not below the truncation {}",
                            self.truncation
                        )));
                    }
                }
            }
        }
        if let Some(b) = self.options.max_ramification {
            if b < 1 {
                return Err(CliError::Parse("options.max_ramification: must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn weight_value(&self) -> Result<Weight, CliError> {
        let theta = self
            .weight
            .iter()
            .enumerate()
            .map(|(a, w)| field_rat(&format!("weight[{a}]"), w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Weight::new(theta))
    }

    /// The connection cut at `truncation`.
    pub fn connection_value(&self, truncation: i64, higgs: bool) -> Result<Connection, CliError> {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (a, row) in self.connection.iter().enumerate() {
            for (b, terms) in row.iter().enumerate() {
                let field = format!("connection[{a}][{b}]");
                let parsed = terms
                    .iter()
                    .filter(|(k, _)| *k < truncation)
                    .map(|(k, v)| Ok((*k, field_rat(&field, v)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                entries.push(LaurentSeries::new(parsed, truncation));
            }
        }
        let mat = MatSeries::from_entries(self.n, entries);
        Ok(if higgs || self.mode == Mode::Higgs { Connection::higgs(mat) } else { Connection::new(mat) })
    }
}
